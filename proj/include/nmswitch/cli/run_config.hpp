// run_config.hpp: CLI run configuration and its layered resolution
//
// Precedence, lowest first: built-in defaults, JSON config file,
// NMSWITCH_OUTPUT_DIR (output_dir only), command-line flags.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "nmswitch/core/qubit.hpp"
#include "nmswitch/errors.hpp"

namespace nmswitch::cli {

enum class Scenario { Eternal, Switched, Series, Parallel, Mixture };

std::string_view to_string(Scenario s) noexcept;
std::optional<Scenario> parse_scenario(std::string_view name);

inline constexpr const char* kOutputDirEnv = "NMSWITCH_OUTPUT_DIR";

struct RunConfig {
    Scenario scenario{Scenario::Eternal};
    double t_max{5.0};
    double dt{0.001};
    BlochVector state_a{0.0, 0.0, 1.0};
    BlochVector state_b{0.0, 0.0, -1.0};
    double mixture_p{0.5};
    std::filesystem::path output_dir{"."};
    std::uint64_t seed{42};
};

/// Invalid configuration; field() names the offending RunConfig field.
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& message);
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Flag values as typed on the command line; unset fields leave the
/// lower layers alone.
struct ConfigOverrides {
    std::optional<std::string> scenario;
    std::optional<double> t_max;
    std::optional<double> dt;
    std::optional<std::string> state_a;
    std::optional<std::string> state_b;
    std::optional<double> mixture_p;
    std::optional<std::string> output_dir;
    std::optional<std::uint64_t> seed;
};

/// "x,y,z" -> BlochVector; throws ConfigError naming field.
BlochVector parse_bloch_triple(std::string_view text, const std::string& field);

/// Applies a JSON object whose keys are RunConfig field names. Unknown keys
/// and mistyped values are ConfigErrors.
void apply_config_json(RunConfig& cfg, std::string_view json_text);
void apply_config_file(RunConfig& cfg, const std::filesystem::path& path);
void apply_overrides(RunConfig& cfg, const ConfigOverrides& flags);

/// Throws ConfigError on the first invalid field.
void validate(const RunConfig& cfg);

/// Layers everything and validates. env_output_dir is the value of
/// NMSWITCH_OUTPUT_DIR or null.
RunConfig resolve_config(const std::optional<std::filesystem::path>& config_file, const char* env_output_dir,
                         const ConfigOverrides& flags);

/// Compact JSON of the computational fields (output_dir excluded so that
/// identical runs into different directories produce identical bytes).
std::string config_echo(const RunConfig& cfg);

} // namespace nmswitch::cli
