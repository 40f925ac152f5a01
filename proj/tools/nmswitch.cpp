// nmswitch: information backflow of two eternal channels under the quantum SWITCH
//
// Exit codes: 0 success, 1 runtime or selftest failure, 2 invalid configuration.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "nmswitch/cli/commands.hpp"

namespace {

using namespace nmswitch::cli;

struct Options {
    ConfigOverrides flags;
    std::string config_file;
    std::string figure{"all"};
    bool inject_fault{false};
};

void add_run_flags(CLI::App& cmd, Options& o)
{
    cmd.add_option("--scenario", o.flags.scenario, "eternal | switched | series | parallel | mixture");
    cmd.add_option("--t-max", o.flags.t_max, "last grid time (default 5)");
    cmd.add_option("--dt", o.flags.dt, "grid step (default 0.001)");
    cmd.add_option("--state-a", o.flags.state_a, "Bloch vector x,y,z (default 0,0,1)");
    cmd.add_option("--state-b", o.flags.state_b, "Bloch vector x,y,z (default 0,0,-1)");
    cmd.add_option("--p", o.flags.mixture_p, "order weight of the mixture scenario (default 0.5)");
    cmd.add_option("--out", o.flags.output_dir, "output directory (env NMSWITCH_OUTPUT_DIR)");
    cmd.add_option("--seed", o.flags.seed, "RNG seed (default 42)");
    cmd.add_option("--config", o.config_file, "JSON file with RunConfig keys");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"nmswitch: trace-distance backflow of eternal channels under the quantum SWITCH"};
    app.require_subcommand(1);
    app.set_version_flag("--version", NMSWITCH_VERSION);

    Options o;
    CLI::App* backflow = app.add_subcommand("backflow", "distance series, backflow measure and characteristic time");
    CLI::App* rates = app.add_subcommand("rates", "canonical Lindblad rates on the grid");
    CLI::App* divisibility = app.add_subcommand("divisibility", "CP- and P-divisibility intervals");
    CLI::App* reproduce = app.add_subcommand("reproduce", "fig2.csv / fig3.csv and the t* headline");
    CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    for (CLI::App* cmd : {backflow, rates, divisibility, reproduce, selftest}) add_run_flags(*cmd, o);
    reproduce->add_option("--figure", o.figure, "distance | rates | all")
        ->check(CLI::IsMember({"distance", "rates", "all"}));
    selftest->add_flag("--inject-fault", o.inject_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        std::optional<std::filesystem::path> config_file;
        if (!o.config_file.empty()) config_file = o.config_file;
        const RunConfig cfg = resolve_config(config_file, std::getenv(kOutputDirEnv), o.flags);

        if (*backflow) return cmd_backflow(cfg, std::cout);
        if (*rates) return cmd_rates(cfg, std::cout);
        if (*divisibility) return cmd_divisibility(cfg, std::cout);
        if (*reproduce) {
            const Figure fig = o.figure == "distance" ? Figure::Distance
                             : o.figure == "rates"    ? Figure::Rates
                                                      : Figure::All;
            return cmd_reproduce(cfg, fig, std::cout);
        }
        return cmd_selftest(cfg, std::cout, o.inject_fault);
    } catch (const ConfigError& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
