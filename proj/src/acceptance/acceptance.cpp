#include "nmswitch/acceptance/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "nmswitch/analysis/backflow.hpp"
#include "nmswitch/analysis/characteristic_time.hpp"
#include "nmswitch/analysis/divisibility.hpp"
#include "nmswitch/analysis/families.hpp"
#include "nmswitch/analysis/generator.hpp"
#include "nmswitch/analysis/positivity.hpp"
#include "nmswitch/channels/eternal.hpp"
#include "nmswitch/core/eigen.hpp"
#include "nmswitch/switchop/quantum_switch.hpp"

namespace nmswitch::acceptance {

namespace {

constexpr double kTMax = 5.0;
constexpr double kDt = 0.001;

struct Check {
    bool passed;
    std::string detail;
};

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

std::string fixed(double v, int digits = 6)
{
    std::ostringstream os;
    os.precision(digits);
    os << std::fixed << v;
    return os.str();
}

DensityMatrix bloch_state(double x, double y, double z)
{
    return density_from_bloch(BlochVector::make(x, y, z));
}

DensityMatrix random_state(std::mt19937_64& rng)
{
    return density_from_bloch(random_bloch(rng));
}

std::vector<double> backflow_grid() { return uniform_grid(0.0, kTMax, kDt); }
std::vector<double> rate_grid() { return uniform_grid(kDt, kTMax, kDt); }

Check kraus_completeness(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> time(0.0, 10.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) worst = std::max(worst, completeness_defect(eternal_channel(time(rng))));
    return {worst < 1e-12, "max completeness defect " + fmt(worst) + " over 100 random t"};
}

Check switch_oracle(const AcceptanceOptions& options)
{
    const DensityMatrix zero = bloch_state(0, 0, 1);
    const DensityMatrix one = bloch_state(0, 0, -1);
    const DensityMatrix plus = bloch_state(1, 0, 0);
    const ControlSpec control = ControlSpec::plus();

    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        const double t = kTMax * k / 199.0;
        SwitchClosedForm cf = switched_channel_closed_form(t);
        if (options.corrupt_closed_form_a) cf.A += 1e-6 * std::exp(-t);

        const KrausChannel n = eternal_channel(t);
        const SwitchOutcome r0 = switch_measure(n, n, zero, control).plus;
        const SwitchOutcome r1 = switch_measure(n, n, one, control).plus;
        const SwitchOutcome rp = switch_measure(n, n, plus, control).plus;
        const double errors[] = {
            std::abs(r0.probability - cf.n),
            std::abs(r1.probability - cf.n),
            std::abs(rp.probability - cf.n),
            std::abs((*r0.state)(0, 0) - cf.A),
            std::abs((*r0.state)(1, 1) - cf.B),
            std::abs((*r1.state)(0, 0) - cf.B),
            std::abs((*r1.state)(1, 1) - cf.A),
            std::abs((*rp.state)(0, 1) - 0.5 * cf.A),
            std::abs((*rp.state)(0, 0) - 0.5 * (cf.A + cf.B)),
        };
        worst = std::max(worst, *std::max_element(std::begin(errors), std::end(errors)));
    }
    return {worst < 1e-12, "max |brute force - closed form| " + fmt(worst) + " over 200 t (A, B, n)"};
}

Check trace_preservation()
{
    double worst = 0.0;
    for (double t : backflow_grid()) {
        const SwitchClosedForm cf = switched_channel_closed_form(t);
        worst = std::max(worst, std::abs(cf.A + cf.B - 1.0));
    }
    return {worst < 1e-12, "max |A + B - 1| " + fmt(worst)};
}

Check eternal_no_backflow(std::mt19937_64& rng)
{
    const auto grid = backflow_grid();
    const ChannelFamily family = families::eternal();
    const BackflowReport z = backflow_scan(family, bloch_state(0, 0, 1), bloch_state(0, 0, -1), grid);
    double dist_err = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        dist_err = std::max(dist_err, std::abs(z.distance[k] - std::exp(-2.0 * grid[k])));
    }

    std::vector<StatePair> pairs;
    for (int i = 0; i < 1000; ++i) pairs.push_back(StatePair{random_state(rng), random_state(rng)});
    double worst_measure = 0.0;
    std::size_t with_revivals = 0;
    for (const auto& r : backflow_scan_pairs(family, pairs, grid)) {
        worst_measure = std::max(worst_measure, r.measure);
        if (!r.revival_intervals.empty()) ++with_revivals;
    }
    const bool ok = z.measure < 1e-9 && z.revival_intervals.empty() && dist_err < 1e-12 && worst_measure < 1e-9 &&
                    with_revivals == 0;
    return {ok, "z-pair measure " + fmt(z.measure) + ", |D - e^-2t| " + fmt(dist_err) + ", worst random measure " +
                    fmt(worst_measure) + ", pairs with revivals " + std::to_string(with_revivals)};
}

Check activation()
{
    const double exact = switched_pole_time();
    const auto grid = backflow_grid();
    const BackflowReport scan =
        backflow_scan(families::switched(), bloch_state(0, 0, 1), bloch_state(0, 0, -1), grid);
    const double root = characteristic_time(CharacteristicTimeQuery{0.0});

    const KrausChannel at_pole = switched_family(exact);
    const double d_min = trace_distance(apply(at_pole, bloch_state(0, 0, 1)), apply(at_pole, bloch_state(0, 0, -1)));
    const double asymptote = std::abs(scan.distance.back() - 1.0 / 7.0);

    const double scan_err = scan.characteristic_time ? std::abs(*scan.characteristic_time - exact) : INFINITY;
    const double root_err = std::abs(root - exact);
    const bool ok = scan_err < 1e-3 && root_err < 1e-12 && d_min < 1e-9 && asymptote < 1e-4;
    return {ok, "t* = " + fixed(exact) + ", scan " +
                    (scan.characteristic_time ? fixed(*scan.characteristic_time) : std::string("none")) +
                    ", |bisection - exact| " + fmt(root_err) + ", D(t*) " + fmt(d_min) + ", |D(5) - 1/7| " +
                    fmt(asymptote)};
}

Check generator_recovery()
{
    const auto grid = rate_grid();
    double eternal_err = 0.0;
    std::size_t eternal_poles = 0;
    for (const auto& s : extract_generator_grid(families::eternal(), grid)) {
        if (s.pole) {
            ++eternal_poles;
            continue;
        }
        const double g3 = -0.5 * std::tanh(s.t);
        eternal_err = std::max({eternal_err, std::abs(s.rates.g1 - 0.5), std::abs(s.rates.g2 - 0.5),
                                std::abs(s.rates.g3 - g3)});
    }

    const double t_star = switched_pole_time();
    GeneratorOptions window;
    window.pole_radius = 0.05;
    double switched_err = 0.0;
    std::size_t misflagged = 0;
    std::size_t poles = 0;
    for (const auto& s : extract_generator_grid(families::switched(), grid, window)) {
        const bool inside = std::abs(s.t - t_star) <= 0.05;
        if (s.pole) ++poles;
        if (inside != s.pole) {
            ++misflagged;
            continue;
        }
        if (inside) continue;
        const LindbladRates exact = closed_form_switched_rates(s.t).rates;
        switched_err = std::max({switched_err, std::abs(s.rates.g1 - exact.g1), std::abs(s.rates.g2 - exact.g2),
                                 std::abs(s.rates.g3 - exact.g3)});
    }
    const bool ok = eternal_err < 1e-6 && eternal_poles == 0 && switched_err < 1e-6 && misflagged == 0 && poles > 0;
    return {ok, "eternal max error " + fmt(eternal_err) + ", switched max error " + fmt(switched_err) +
                    ", pole samples " + std::to_string(poles) + ", misflagged " + std::to_string(misflagged)};
}

Check divisibility_verdicts()
{
    const auto grid = rate_grid();
    GeneratorOptions opts;
    opts.pole_radius = 0.0; // conditioning alone decides; the verdict needs samples next to t*

    const auto eternal = assess_divisibility(extract_generator_grid(families::eternal(), grid, opts));
    const bool eternal_ok = eternal.cp_divisible_intervals.empty() && eternal.p_divisible_intervals.size() == 1 &&
                            eternal.p_divisible_intervals[0].start == grid.front() &&
                            eternal.p_divisible_intervals[0].end == grid.back();

    const double t_star = switched_pole_time();
    const auto switched_samples = extract_generator_grid(families::switched(), grid, opts);
    const auto switched = assess_divisibility(switched_samples);
    std::size_t wrong_side = 0;
    for (const auto& s : switched_samples) {
        if (!s.pole && is_p_divisible_at(s.rates) != (s.t < t_star)) ++wrong_side;
    }
    const double first_violation = switched.violated_pairs.empty() ? INFINITY : switched.violated_pairs.front().t;
    const bool switched_ok = switched.cp_divisible_intervals.empty() && wrong_side == 0 &&
                             first_violation > t_star && first_violation - t_star <= 2.0 * kDt;

    // F_zz = e^{-4t} is a cancellation of O(1) Kraus weights, so its absolute
    // roundoff u is amplified to about u cond(F) / h in the extracted rates.
    // Each sample is held to that bound (1e-6 at least). Past t ~ 3.9
    // |det F| = lambda^4 e^{-4t} drops under the determinant floor and the
    // samples are excluded as singular; they must form one trailing block.
    const auto series_samples = extract_generator_grid(families::series(), grid, opts);
    const auto series = assess_divisibility(series_samples);
    double series_err = 0.0;
    double strict_until = 0.0;
    bool strict = true;
    std::size_t outside_bound = 0;
    for (const auto& s : series_samples) {
        if (s.pole) continue;
        const double err = std::max({std::abs(s.rates.g1 - 1.0), std::abs(s.rates.g2 - 1.0),
                                     std::abs(s.rates.g3 + std::tanh(s.t))});
        const double bound = std::max(1e-6, std::numeric_limits<double>::epsilon() *
                                                sample_transfer(families::series(), s.t).F.condition_number() /
                                                opts.h);
        if (err > bound) ++outside_bound;
        strict = strict && err < 1e-6;
        if (strict) strict_until = s.t;
        series_err = std::max(series_err, err);
    }
    const bool series_tail_only =
        series.pole_intervals.empty() ||
        (series.pole_intervals.size() == 1 && series.pole_intervals[0].end == grid.back());
    const bool series_ok = outside_bound == 0 && series.cp_divisible_intervals.empty() &&
                           series.p_divisible_intervals.size() == 1 && series.violated_pairs.empty() &&
                           series_tail_only;

    return {eternal_ok && switched_ok && series_ok,
            "eternal CP " + format_intervals(eternal.cp_divisible_intervals) + " P " +
                format_intervals(eternal.p_divisible_intervals) + "; switched CP " +
                format_intervals(switched.cp_divisible_intervals) + ", first P violation " +
                fixed(first_violation, 4) + " (t* " + fixed(t_star, 4) + "), misclassified " +
                std::to_string(wrong_side) + "; series rate error " + fmt(series_err) + " (< 1e-6 up to t = " + fixed(strict_until, 3) +
                ", beyond roundoff bound " + std::to_string(outside_bound) + "), P " +
                format_intervals(series.p_divisible_intervals) + ", excluded as singular " +
                format_intervals(series.pole_intervals)};
}

Check mixture_no_go(std::mt19937_64& rng)
{
    std::vector<DensityMatrix> states;
    for (int i = 0; i < 1000; ++i) states.push_back(random_state(rng));
    double worst = 0.0;
    for (double t : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        const KrausChannel n = eternal_channel(t);
        const KrausChannel twice = compose_series(n, n);
        for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            for (const auto& rho : states) {
                worst = std::max(worst, max_abs_diff(mixed_order_traced(n, n, p, rho).matrix(),
                                                     apply(twice, rho).matrix()));
            }
        }
    }
    return {worst < 1e-12, "max |mixed order - N.N| " + fmt(worst) + " over 5 t x 5 p x 1000 states"};
}

Check parallel_no_go(std::mt19937_64& rng)
{
    std::vector<StatePair> pairs;
    for (int i = 0; i < 500; ++i) {
        const DensityMatrix a = tensor(random_state(rng), random_state(rng));
        const DensityMatrix b = tensor(random_state(rng), random_state(rng));
        pairs.push_back(StatePair{a, b});
    }
    double worst = -INFINITY;
    std::size_t reviving = 0;
    for (const auto& r : backflow_scan_pairs(families::parallel(), pairs, backflow_grid())) {
        worst = std::max(worst, *std::max_element(r.derivative.begin(), r.derivative.end()));
        if (!r.revival_intervals.empty()) ++reviving;
    }
    return {worst <= kDerivativeTolerance && reviving == 0,
            "max dD/dt " + fmt(worst) + " over 500 pairs, pairs with revivals " + std::to_string(reviving)};
}

Check determinant_oracle(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> rate(-1.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss;
    std::size_t disagreements = 0;
    std::size_t neutral = 0;
    std::size_t negative = 0;
    for (int i = 0; i < 10000; ++i) {
        const LindbladRates g{rate(rng), rate(rng), rate(rng)};
        const double largest = std::max({std::abs(g.g1), std::abs(g.g2), std::abs(g.g3)});
        const double eps = unit(rng) * 0.0099 / largest;
        Complex phi1{gauss(rng), gauss(rng)};
        Complex phi2{gauss(rng), gauss(rng)};
        const double norm = std::sqrt(std::norm(phi1) + std::norm(phi2));
        phi1 /= norm;
        phi2 /= norm;

        const InfinitesimalOutput out = infinitesimal_map_output(g, eps, phi1, phi2);
        const double lambda_min = eigenvalues_hermitian(out.output).back();
        if (std::abs(out.determinant) <= 1e-10 || std::abs(lambda_min) <= 1e-10) {
            ++neutral;
            continue;
        }
        if (out.determinant < 0) ++negative;
        if ((out.determinant < 0) != (lambda_min < 0)) ++disagreements;
    }
    return {disagreements == 0, std::to_string(disagreements) + " disagreements in 10000 draws (" +
                                    std::to_string(negative) + " negative, " + std::to_string(neutral) + " neutral)"};
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options)
{
    // Each criterion draws from its own stream so results do not depend on order.
    auto rng = [&](int id) { return std::mt19937_64(options.seed + static_cast<std::uint64_t>(id)); };

    struct Entry {
        int id;
        const char* name;
        std::function<Check()> run;
    };
    const std::vector<Entry> entries = {
        {1, "Kraus completeness", [&] { auto r = rng(1); return kraus_completeness(r); }},
        {2, "SWITCH oracle equivalence", [&] { return switch_oracle(options); }},
        {3, "A + B = 1", [&] { return trace_preservation(); }},
        {4, "no backflow for the eternal channel", [&] { auto r = rng(4); return eternal_no_backflow(r); }},
        {5, "activation at t*", [&] { return activation(); }},
        {6, "generator recovery", [&] { return generator_recovery(); }},
        {7, "divisibility verdicts", [&] { return divisibility_verdicts(); }},
        {8, "convex-mixture no-go", [&] { auto r = rng(8); return mixture_no_go(r); }},
        {9, "parallel no-go", [&] { auto r = rng(9); return parallel_no_go(r); }},
        {10, "determinant sign oracle", [&] { auto r = rng(10); return determinant_oracle(r); }},
    };

    std::vector<CriterionResult> results;
    for (const auto& e : entries) {
        if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), e.id) == options.only.end()) {
            continue;
        }
        try {
            Check c = e.run();
            results.push_back(CriterionResult{e.id, e.name, c.passed, std::move(c.detail)});
        } catch (const std::exception& ex) {
            results.push_back(CriterionResult{e.id, e.name, false, std::string("threw: ") + ex.what()});
        }
    }
    return results;
}

bool print_results(std::ostream& os, const std::vector<CriterionResult>& results)
{
    bool all = true;
    for (const auto& r : results) {
        os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << ": " << r.detail << '\n';
        all = all && r.passed;
    }
    return all;
}

} // namespace nmswitch::acceptance
