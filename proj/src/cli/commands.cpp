#include "nmswitch/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "nmswitch/acceptance/acceptance.hpp"
#include "nmswitch/analysis/backflow.hpp"
#include "nmswitch/analysis/characteristic_time.hpp"
#include "nmswitch/analysis/divisibility.hpp"
#include "nmswitch/analysis/generator.hpp"

namespace nmswitch::cli {

namespace {

// One CSV file: a '#' comment line with version, seed and config, then a
// header row, then full-precision rows.
class CsvFile {
public:
    CsvFile(const RunConfig& cfg, std::string_view command, const std::string& name, std::string_view columns)
        : path_(cfg.output_dir / name)
    {
        std::filesystem::create_directories(cfg.output_dir);
        out_.open(path_, std::ios::binary | std::ios::trunc);
        if (!out_) throw Error(ErrorCode::InvalidArgument, "cannot write " + path_.string());
        out_ << "# nmswitch " << NMSWITCH_VERSION << " command=" << command << " seed=" << cfg.seed
             << " config=" << config_echo(cfg) << '\n'
             << columns << '\n';
        out_ << std::setprecision(17);
    }

    CsvFile& cell(double v)
    {
        sep();
        out_ << v;
        return *this;
    }
    CsvFile& flag(bool b)
    {
        sep();
        out_ << (b ? 1 : 0);
        return *this;
    }
    CsvFile& blank()
    {
        sep();
        return *this;
    }
    void end_row()
    {
        out_ << '\n';
        first_ = true;
    }

    const std::filesystem::path& close()
    {
        out_.close();
        if (!out_) throw Error(ErrorCode::InvalidArgument, "failed writing " + path_.string());
        return path_;
    }

private:
    void sep()
    {
        if (!first_) out_ << ',';
        first_ = false;
    }

    std::filesystem::path path_;
    std::ofstream out_;
    bool first_{true};
};

std::string fixed(double v, int digits)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

ChannelFamily family_for(const RunConfig& cfg)
{
    switch (cfg.scenario) {
    case Scenario::Eternal: return families::eternal();
    case Scenario::Switched: return families::switched();
    case Scenario::Series: return families::series();
    case Scenario::Parallel: return families::parallel();
    case Scenario::Mixture: return families::mixture(cfg.mixture_p);
    }
    throw ConfigError("scenario", "unhandled scenario");
}

ChannelFamily qubit_generator_family(const RunConfig& cfg)
{
    if (cfg.scenario == Scenario::Parallel || cfg.scenario == Scenario::Mixture) {
        throw ConfigError("scenario", std::string(to_string(cfg.scenario)) +
                                          " has no single-qubit generator; use eternal, switched or series");
    }
    return family_for(cfg);
}

std::vector<double> rate_grid(const RunConfig& cfg) { return uniform_grid(cfg.dt, cfg.t_max, cfg.dt); }

DensityMatrix qubit(const BlochVector& v) { return density_from_bloch(v); }

std::string optional_time(const std::optional<double>& t)
{
    return t ? fixed(*t, 6) : std::string("none");
}

std::string pair_label(const PairViolation& v)
{
    std::string label;
    auto add = [&](bool on, const char* name) {
        if (!on) return;
        if (!label.empty()) label += ", ";
        label += name;
    };
    add(v.g1_g2, "G1+G2");
    add(v.g1_g3, "G1+G3");
    add(v.g2_g3, "G2+G3");
    return label.empty() ? std::string("(within tolerance)") : label;
}

} // namespace

int cmd_backflow(const RunConfig& cfg, std::ostream& out)
{
    const ChannelFamily family = family_for(cfg);
    DensityMatrix a = qubit(cfg.state_a);
    DensityMatrix b = qubit(cfg.state_b);
    if (family.dim == 4) {
        a = tensor(a, a);
        b = tensor(b, b);
    }
    const auto grid = uniform_grid(0.0, cfg.t_max, cfg.dt);
    const BackflowReport r = backflow_scan(family, a, b, grid);

    CsvFile csv(cfg, "backflow", "distance.csv", "t,distance,derivative,reviving");
    for (std::size_t k = 0; k < grid.size(); ++k) {
        csv.cell(r.times[k]).cell(r.distance[k]).cell(r.derivative[k]).flag(r.reviving_at(k));
        csv.end_row();
    }
    const auto path = csv.close();

    out << "scenario=" << to_string(cfg.scenario) << '\n'
        << "measure=" << fixed(r.measure, 6) << ", characteristic_time=" << optional_time(r.characteristic_time)
        << '\n'
        << "revival intervals: " << format_intervals(r.revival_intervals) << '\n'
        << "wrote " << path.string() << '\n';
    return 0;
}

int cmd_rates(const RunConfig& cfg, std::ostream& out)
{
    const ChannelFamily family = qubit_generator_family(cfg);
    const auto samples = extract_generator_grid(family, rate_grid(cfg));

    CsvFile csv(cfg, "rates", "rates.csv", "t,gamma1,gamma2,gamma3,pole");
    std::size_t poles = 0;
    for (const auto& s : samples) {
        csv.cell(s.t);
        if (s.pole) {
            ++poles;
            csv.blank().blank().blank();
        } else {
            csv.cell(s.rates.g1).cell(s.rates.g2).cell(s.rates.g3);
        }
        csv.flag(s.pole).end_row();
    }
    const auto path = csv.close();

    out << "scenario=" << to_string(cfg.scenario) << ", samples=" << samples.size() << ", pole rows=" << poles
        << '\n'
        << "wrote " << path.string() << '\n';
    return 0;
}

int cmd_divisibility(const RunConfig& cfg, std::ostream& out)
{
    const ChannelFamily family = qubit_generator_family(cfg);
    // Conditioning alone flags singular samples here so the verdict reaches
    // the grid points next to a singular time.
    GeneratorOptions options;
    options.pole_radius = 0.0;
    const auto samples = extract_generator_grid(family, rate_grid(cfg), options);
    const DivisibilityVerdict v = assess_divisibility(samples);

    out << "scenario=" << to_string(cfg.scenario) << '\n'
        << "CP: " << format_intervals(v.cp_divisible_intervals) << "; P: " << format_intervals(v.p_divisible_intervals)
        << '\n';

    out << "violated pairwise sums:";
    if (v.violated_pairs.empty()) out << " none";
    out << '\n';
    const double gap = 1.5 * cfg.dt;
    for (std::size_t i = 0; i < v.violated_pairs.size();) {
        const std::string label = pair_label(v.violated_pairs[i]);
        std::size_t j = i;
        while (j + 1 < v.violated_pairs.size() && pair_label(v.violated_pairs[j + 1]) == label &&
               v.violated_pairs[j + 1].t - v.violated_pairs[j].t < gap) {
            ++j;
        }
        out << "  " << label << " < 0 on [" << v.violated_pairs[i].t << ", " << v.violated_pairs[j].t << "]\n";
        i = j + 1;
    }
    out << "excluded (singular transfer matrix): " << format_intervals(v.pole_intervals) << '\n';
    return 0;
}

int cmd_reproduce(const RunConfig& cfg, Figure figure, std::ostream& out)
{
    const DensityMatrix up = qubit(BlochVector{0.0, 0.0, 1.0});
    const DensityMatrix down = qubit(BlochVector{0.0, 0.0, -1.0});

    if (figure == Figure::Distance || figure == Figure::All) {
        const auto grid = uniform_grid(0.0, cfg.t_max, cfg.dt);
        const BackflowReport eternal = backflow_scan(families::eternal(), up, down, grid);
        const BackflowReport switched = backflow_scan(families::switched(), up, down, grid);

        CsvFile csv(cfg, "reproduce", "fig2.csv", "t,d_eternal,d_switched");
        for (std::size_t k = 0; k < grid.size(); ++k) {
            csv.cell(grid[k]).cell(eternal.distance[k]).cell(switched.distance[k]);
            csv.end_row();
        }
        out << "wrote " << csv.close().string() << '\n';
        out << "t* = " << (switched.characteristic_time ? fixed(*switched.characteristic_time, 4) : "none")
            << " (expected ~0.67; closed form 1/2 ln(1 + 2 sqrt 2) = " << fixed(switched_pole_time(), 6) << ")\n";
    }

    if (figure == Figure::Rates || figure == Figure::All) {
        const double t_star = switched_pole_time();
        CsvFile csv(cfg, "reproduce", "fig3.csv", "t,gamma1,gamma2,gamma3,pole");
        for (double t : rate_grid(cfg)) {
            const bool pole = std::abs(t - t_star) < kPoleExclusionRadius;
            csv.cell(t);
            if (pole) {
                csv.blank().blank().blank();
            } else {
                const LindbladRates r = closed_form_switched_rates(t).rates;
                csv.cell(r.g1).cell(r.g2).cell(r.g3);
            }
            csv.flag(pole).end_row();
        }
        out << "wrote " << csv.close().string() << '\n';
    }
    return 0;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out, bool inject_fault)
{
    acceptance::AcceptanceOptions options;
    options.seed = cfg.seed;
    options.corrupt_closed_form_a = inject_fault;
    const auto results = acceptance::run_acceptance(options);
    const bool ok = acceptance::print_results(out, results);
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed ? 1 : 0;
    out << passed << '/' << results.size() << " criteria passed\n";
    return ok ? 0 : 1;
}

} // namespace nmswitch::cli
