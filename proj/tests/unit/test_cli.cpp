#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "nmswitch/acceptance/acceptance.hpp"
#include "nmswitch/cli/commands.hpp"
#include "nmswitch/cli/run_config.hpp"

using namespace nmswitch;
using namespace nmswitch::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name)
{
    const fs::path p = fs::temp_directory_path() / ("nmswitch_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::vector<std::string>> rows(const fs::path& p)
{
    std::vector<std::vector<std::string>> out;
    std::ifstream in(p);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        out.push_back(cells);
    }
    return out;
}

std::string config_field(auto&& fn)
{
    try {
        fn();
    } catch (const ConfigError& e) {
        return e.field();
    }
    return "";
}

RunConfig small(Scenario s, const fs::path& dir)
{
    RunConfig cfg;
    cfg.scenario = s;
    cfg.t_max = 2.0;
    cfg.dt = 0.01;
    cfg.output_dir = dir;
    return cfg;
}

} // namespace

TEST_CASE("Bloch triples from flags")
{
    const BlochVector v = parse_bloch_triple("0.1, -0.2,0.3", "state_a");
    CHECK(v.x == 0.1);
    CHECK(v.y == -0.2);
    CHECK(v.z == 0.3);
    CHECK(config_field([] { parse_bloch_triple("1,1,0", "state_a"); }) == "state_a");
    CHECK(config_field([] { parse_bloch_triple("0,0", "state_b"); }) == "state_b");
    CHECK(config_field([] { parse_bloch_triple("0,0,0,0", "state_b"); }) == "state_b");
    CHECK(config_field([] { parse_bloch_triple("0,x,0", "state_b"); }) == "state_b");
}

TEST_CASE("config precedence: defaults < file < env < flags")
{
    const fs::path dir = scratch("precedence");
    const fs::path file = dir / "cfg.json";
    std::ofstream(file) << R"({"scenario": "switched", "t_max": 3, "dt": 0.01, "output_dir": "from_file",
                               "state_a": [0.5, 0, 0], "mixture_p": 0.2, "seed": 7})";

    ConfigOverrides none;
    RunConfig cfg = resolve_config(file, nullptr, none);
    CHECK(cfg.scenario == Scenario::Switched);
    CHECK(cfg.t_max == 3.0);
    CHECK(cfg.state_a.x == 0.5);
    CHECK(cfg.state_b.z == -1.0);
    CHECK(cfg.mixture_p == 0.2);
    CHECK(cfg.seed == 7);
    CHECK(cfg.output_dir == "from_file");

    cfg = resolve_config(file, "from_env", none);
    CHECK(cfg.output_dir == "from_env");

    ConfigOverrides flags;
    flags.output_dir = "from_flag";
    flags.t_max = 4.0;
    flags.scenario = "series";
    cfg = resolve_config(file, "from_env", flags);
    CHECK(cfg.output_dir == "from_flag");
    CHECK(cfg.t_max == 4.0);
    CHECK(cfg.scenario == Scenario::Series);
    CHECK(cfg.dt == 0.01);

    const RunConfig defaults = resolve_config(std::nullopt, nullptr, none);
    CHECK(defaults.scenario == Scenario::Eternal);
    CHECK(defaults.t_max == 5.0);
    CHECK(defaults.dt == 0.001);
    CHECK(defaults.mixture_p == 0.5);
    CHECK(defaults.seed == 42);
}

TEST_CASE("invalid configuration names the field")
{
    RunConfig cfg;
    CHECK(config_field([&] { apply_config_json(cfg, R"({"t_maxx": 1})"); }) == "t_maxx");
    CHECK(config_field([&] { apply_config_json(cfg, R"({"dt": "small"})"); }) == "dt");
    CHECK(config_field([&] { apply_config_json(cfg, R"({"scenario": "triple"})"); }) == "scenario");
    CHECK(config_field([&] { apply_config_json(cfg, R"({"state_b": [0, 0]})"); }) == "state_b");
    CHECK(config_field([&] { apply_config_json(cfg, R"({"seed": -3})"); }) == "seed");
    CHECK(config_field([&] { apply_config_json(cfg, "{not json"); }) == "config");
    CHECK(config_field([&] { apply_config_file(cfg, "/nonexistent/cfg.json"); }) == "config");

    auto invalid = [](auto edit) {
        RunConfig c;
        edit(c);
        return config_field([&] { validate(c); });
    };
    CHECK(invalid([](RunConfig& c) { c.t_max = 0.0; }) == "t_max");
    CHECK(invalid([](RunConfig& c) { c.t_max = NAN; }) == "t_max");
    CHECK(invalid([](RunConfig& c) { c.dt = -0.1; }) == "dt");
    CHECK(invalid([](RunConfig& c) { c.dt = 6.0; }) == "dt");
    CHECK(invalid([](RunConfig& c) { c.mixture_p = 1.5; }) == "mixture_p");
    CHECK(invalid([](RunConfig&) {}) == "");
}

TEST_CASE("rates and divisibility refuse scenarios without a qubit generator")
{
    const fs::path dir = scratch("refuse");
    std::ostringstream out;
    CHECK(config_field([&] { cmd_rates(small(Scenario::Parallel, dir), out); }) == "scenario");
    CHECK(config_field([&] { cmd_divisibility(small(Scenario::Mixture, dir), out); }) == "scenario");
}

TEST_CASE("backflow CSV schema and summaries")
{
    const fs::path dir = scratch("backflow");
    std::ostringstream out;
    REQUIRE(cmd_backflow(small(Scenario::Eternal, dir), out) == 0);
    CHECK(out.str().find("measure=0.000000, characteristic_time=none") != std::string::npos);

    const std::string text = slurp(dir / "distance.csv");
    CHECK(text.rfind("# nmswitch ", 0) == 0);
    CHECK(text.find("seed=42") != std::string::npos);
    const auto r = rows(dir / "distance.csv");
    REQUIRE(r.size() == 202);
    CHECK(r[0] == std::vector<std::string>{"t", "distance", "derivative", "reviving"});
    CHECK(std::stod(r[51][1]) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));

    std::ostringstream sw;
    REQUIRE(cmd_backflow(small(Scenario::Switched, dir), sw) == 0);
    CHECK(sw.str().find("characteristic_time=0.671") != std::string::npos);
}

TEST_CASE("mixture and series scenarios give the same distances")
{
    const fs::path a = scratch("mix");
    const fs::path b = scratch("series");
    RunConfig mix = small(Scenario::Mixture, a);
    mix.mixture_p = 0.3;
    mix.state_a = {0.2, 0.4, -0.1};
    RunConfig series = small(Scenario::Series, b);
    series.state_a = mix.state_a;
    std::ostringstream out;
    cmd_backflow(mix, out);
    cmd_backflow(series, out);
    const auto rm = rows(a / "distance.csv");
    const auto rs = rows(b / "distance.csv");
    REQUIRE(rm.size() == rs.size());
    for (std::size_t k = 1; k < rm.size(); ++k) CHECK(std::abs(std::stod(rm[k][1]) - std::stod(rs[k][1])) < 1e-12);
}

TEST_CASE("identical configs produce identical bytes")
{
    const fs::path a = scratch("det_a");
    const fs::path b = scratch("det_b");
    std::ostringstream out;
    cmd_reproduce(small(Scenario::Eternal, a), Figure::All, out);
    cmd_reproduce(small(Scenario::Eternal, b), Figure::All, out);
    CHECK(slurp(a / "fig2.csv") == slurp(b / "fig2.csv"));
    CHECK(slurp(a / "fig3.csv") == slurp(b / "fig3.csv"));
    CHECK_FALSE(slurp(a / "fig2.csv").empty());
}

TEST_CASE("reproduce: figure columns")
{
    const fs::path dir = scratch("reproduce");
    std::ostringstream out;
    REQUIRE(cmd_reproduce(small(Scenario::Eternal, dir), Figure::All, out) == 0);
    CHECK(out.str().find("t* = 0.671") != std::string::npos);

    const auto fig2 = rows(dir / "fig2.csv");
    CHECK(fig2[0] == std::vector<std::string>{"t", "d_eternal", "d_switched"});
    CHECK(fig2[1] == std::vector<std::string>{"0", "1", "1"});
    for (std::size_t k = 1; k < fig2.size(); k += 20) {
        const double t = std::stod(fig2[k][0]);
        const double v = std::exp(-2.0 * t);
        CHECK(std::abs(std::stod(fig2[k][1]) - v) < 1e-12);
    }

    const auto fig3 = rows(dir / "fig3.csv");
    CHECK(fig3[0] == std::vector<std::string>{"t", "gamma1", "gamma2", "gamma3", "pole"});
    std::size_t poles = 0;
    for (std::size_t k = 1; k < fig3.size(); ++k) {
        if (fig3[k][4] == "1") {
            ++poles;
            CHECK(fig3[k][1].empty());
            CHECK(std::abs(std::stod(fig3[k][0]) - 0.671227) < 0.02);
        }
    }
    CHECK(poles == 4);
}

TEST_CASE("rates CSV carries empty cells on pole rows")
{
    const fs::path dir = scratch("rates");
    std::ostringstream out;
    REQUIRE(cmd_rates(small(Scenario::Switched, dir), out) == 0);
    const auto r = rows(dir / "rates.csv");
    bool saw_pole = false;
    for (std::size_t k = 1; k < r.size(); ++k) {
        if (r[k][4] == "1") {
            saw_pole = true;
            CHECK(r[k][1].empty());
            CHECK(r[k][3].empty());
        } else {
            CHECK_FALSE(r[k][1].empty());
        }
    }
    CHECK(saw_pole);

    const fs::path eternal_dir = scratch("rates_eternal");
    REQUIRE(cmd_rates(small(Scenario::Eternal, eternal_dir), out) == 0);
    for (const auto& row : rows(eternal_dir / "rates.csv")) {
        if (row[0] == "t") continue;
        CHECK(std::abs(std::stod(row[3]) + 0.5 * std::tanh(std::stod(row[0]))) < 1e-6);
    }
}

TEST_CASE("divisibility report")
{
    const fs::path dir = scratch("div");
    std::ostringstream eternal, switched;
    cmd_divisibility(small(Scenario::Eternal, dir), eternal);
    CHECK(eternal.str().find("CP: none; P: [0.01, 2]") != std::string::npos);
    cmd_divisibility(small(Scenario::Switched, dir), switched);
    CHECK(switched.str().find("CP: none; P: [0.01, 0.67]") != std::string::npos);
    CHECK(switched.str().find("G1+G2 < 0 on [0.68, 2]") != std::string::npos);
}

TEST_CASE("the acceptance gate detects a corrupted closed form")
{
    acceptance::AcceptanceOptions options;
    options.only = {2, 3};
    options.corrupt_closed_form_a = true;
    const auto bad = acceptance::run_acceptance(options);
    REQUIRE(bad.size() == 2);
    CHECK_FALSE(bad[0].passed);
    CHECK(bad[0].name == "SWITCH oracle equivalence");
    CHECK(bad[1].passed);

    options.corrupt_closed_form_a = false;
    CHECK(acceptance::run_acceptance(options)[0].passed);
}
