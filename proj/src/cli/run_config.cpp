#include "nmswitch/cli/run_config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nmswitch::cli {

namespace {

using nlohmann::json;

constexpr std::array<std::pair<Scenario, std::string_view>, 5> kScenarios{{
    {Scenario::Eternal, "eternal"},
    {Scenario::Switched, "switched"},
    {Scenario::Series, "series"},
    {Scenario::Parallel, "parallel"},
    {Scenario::Mixture, "mixture"},
}};

Scenario scenario_or_throw(std::string_view name)
{
    if (auto s = parse_scenario(name)) return *s;
    throw ConfigError("scenario", "unknown scenario '" + std::string(name) +
                                      "' (expected eternal, switched, series, parallel or mixture)");
}

BlochVector bloch_or_throw(double x, double y, double z, const std::string& field)
{
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
        throw ConfigError(field, "Bloch components must be finite");
    }
    try {
        return BlochVector::make(x, y, z);
    } catch (const Error&) {
        throw ConfigError(field, "Bloch vector lies outside the unit ball");
    }
}

double number(const json& v, const std::string& field)
{
    if (!v.is_number()) throw ConfigError(field, "expected a number");
    return v.get<double>();
}

} // namespace

std::string_view to_string(Scenario s) noexcept
{
    for (const auto& [value, name] : kScenarios) {
        if (value == s) return name;
    }
    return "?";
}

std::optional<Scenario> parse_scenario(std::string_view name)
{
    for (const auto& [value, label] : kScenarios) {
        if (label == name) return value;
    }
    return std::nullopt;
}

ConfigError::ConfigError(std::string field, const std::string& message)
    : Error(ErrorCode::InvalidArgument, field + ": " + message), field_(std::move(field))
{
}

BlochVector parse_bloch_triple(std::string_view text, const std::string& field)
{
    std::array<double, 3> v{};
    std::size_t filled = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view part = text.substr(pos, comma - pos);
        while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
        while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
        if (filled == 3) throw ConfigError(field, "expected exactly three comma-separated numbers");
        double value = 0.0;
        const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (part.empty() || ec != std::errc{} || end != part.data() + part.size()) {
            throw ConfigError(field, "'" + std::string(part) + "' is not a number");
        }
        v[filled++] = value;
        pos = comma + 1;
    }
    if (filled != 3) throw ConfigError(field, "expected exactly three comma-separated numbers");
    return bloch_or_throw(v[0], v[1], v[2], field);
}

void apply_config_json(RunConfig& cfg, std::string_view json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("config", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config", "top level must be a JSON object");

    for (const auto& [key, value] : doc.items()) {
        if (key == "scenario") {
            if (!value.is_string()) throw ConfigError(key, "expected a string");
            cfg.scenario = scenario_or_throw(value.get<std::string>());
        } else if (key == "t_max") {
            cfg.t_max = number(value, key);
        } else if (key == "dt") {
            cfg.dt = number(value, key);
        } else if (key == "state_a" || key == "state_b") {
            if (!value.is_array() || value.size() != 3) throw ConfigError(key, "expected an array of three numbers");
            const BlochVector b =
                bloch_or_throw(number(value[0], key), number(value[1], key), number(value[2], key), key);
            (key == "state_a" ? cfg.state_a : cfg.state_b) = b;
        } else if (key == "mixture_p") {
            cfg.mixture_p = number(value, key);
        } else if (key == "output_dir") {
            if (!value.is_string()) throw ConfigError(key, "expected a string");
            cfg.output_dir = value.get<std::string>();
        } else if (key == "seed") {
            if (!value.is_number_unsigned()) throw ConfigError(key, "expected a non-negative integer");
            cfg.seed = value.get<std::uint64_t>();
        } else {
            throw ConfigError(key, "unknown configuration key");
        }
    }
}

void apply_config_file(RunConfig& cfg, const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot read " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    apply_config_json(cfg, text.str());
}

void apply_overrides(RunConfig& cfg, const ConfigOverrides& flags)
{
    if (flags.scenario) cfg.scenario = scenario_or_throw(*flags.scenario);
    if (flags.t_max) cfg.t_max = *flags.t_max;
    if (flags.dt) cfg.dt = *flags.dt;
    if (flags.state_a) cfg.state_a = parse_bloch_triple(*flags.state_a, "state_a");
    if (flags.state_b) cfg.state_b = parse_bloch_triple(*flags.state_b, "state_b");
    if (flags.mixture_p) cfg.mixture_p = *flags.mixture_p;
    if (flags.output_dir) cfg.output_dir = *flags.output_dir;
    if (flags.seed) cfg.seed = *flags.seed;
}

void validate(const RunConfig& cfg)
{
    if (!std::isfinite(cfg.t_max) || !(cfg.t_max > 0.0)) throw ConfigError("t_max", "must be a finite number > 0");
    if (!std::isfinite(cfg.dt) || !(cfg.dt > 0.0)) throw ConfigError("dt", "must be a finite number > 0");
    if (!(cfg.dt < cfg.t_max)) throw ConfigError("dt", "must be smaller than t_max");
    if (cfg.t_max / cfg.dt > 1e7) throw ConfigError("dt", "grid would exceed 10^7 points");
    if (!(cfg.mixture_p >= 0.0 && cfg.mixture_p <= 1.0)) throw ConfigError("mixture_p", "must lie in [0, 1]");
    if (cfg.output_dir.empty()) throw ConfigError("output_dir", "must not be empty");
}

RunConfig resolve_config(const std::optional<std::filesystem::path>& config_file, const char* env_output_dir,
                         const ConfigOverrides& flags)
{
    RunConfig cfg;
    if (config_file) apply_config_file(cfg, *config_file);
    if (env_output_dir && *env_output_dir) cfg.output_dir = env_output_dir;
    apply_overrides(cfg, flags);
    validate(cfg);
    return cfg;
}

std::string config_echo(const RunConfig& cfg)
{
    const json doc = {
        {"scenario", std::string(to_string(cfg.scenario))},
        {"t_max", cfg.t_max},
        {"dt", cfg.dt},
        {"state_a", {cfg.state_a.x, cfg.state_a.y, cfg.state_a.z}},
        {"state_b", {cfg.state_b.x, cfg.state_b.y, cfg.state_b.z}},
        {"mixture_p", cfg.mixture_p},
        {"seed", cfg.seed},
    };
    return doc.dump();
}

} // namespace nmswitch::cli
