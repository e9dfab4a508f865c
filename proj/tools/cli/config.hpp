#pragma once

// Run configuration for the fdqpt command-line tool.
//
// Config files are line-oriented:
//
//   # comment
//   [model]
//   preset = example1
//   delta1 = 3.14159
//   [grid]
//   k_points = 401
//   [winding]        ; per-command section, overrides [grid]/[run] for that command
//   t_points = 121
//
// Precedence (lowest first): command defaults, preset, [model]/[grid]/[run],
// the section named after the command, command-line flags.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fdqpt/model.hpp"

namespace fdqpt::cli {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

const char* to_string(OutputFormat format);

/// Command names in the order they are documented.
const std::vector<std::string>& command_names();

/// Every field unset means "not given at this layer".
struct ConfigSettings {
    std::optional<std::string> preset;
    std::optional<double> omega_drive;
    std::optional<double> delta1;
    std::optional<double> delta2;
    std::optional<double> omega_amp;
    std::optional<std::string> time_unit;

    std::optional<Band> band;
    std::optional<int> k_points;
    std::optional<int> t_points;
    std::optional<double> t_max;

    std::optional<int> sites;
    std::optional<int> steps;
    std::optional<int> n_max;
    std::optional<int> draws;
    std::optional<std::uint64_t> seed;
    std::optional<OutputFormat> format;
    std::optional<std::string> out;

    /// Fields set in `top` replace ours.
    void merge(const ConfigSettings& top);
    bool operator==(const ConfigSettings&) const = default;
};

struct ConfigDocument {
    ConfigSettings common;
    std::map<std::string, ConfigSettings> per_command;

    bool operator==(const ConfigDocument&) const = default;
};

/// Throws ConfigError naming `source`, the line and the offending field.
ConfigDocument parse_config(std::string_view text, std::string_view source = "<config>");
ConfigDocument load_config(const std::string& path);

/// Canonical text form; parse_config(serialize_config(d)) == d.
std::string serialize_config(const ConfigDocument& doc);

/// Fully resolved settings for one command.
struct RunConfig {
    std::string command;
    std::string preset;
    ModelParams params;
    std::string time_unit;
    Band band = Band::minus;
    int k_points = 101;
    int t_points = 201;
    double t_max = 6.0;
    int sites = 40;
    int steps = 2048;
    int n_max = 3;
    int draws = 100;
    std::uint64_t seed = 20240607;
    OutputFormat format = OutputFormat::csv;
    std::string out;  ///< empty: standard output

    /// Throws ConfigError.
    void validate() const;
};

RunConfig resolve_config(const std::string& command, const ConfigDocument& file,
                         const ConfigSettings& flags);

/// Parsers shared with the flag layer; throw ConfigError mentioning `field`.
Band parse_band(std::string_view value, std::string_view field = "band");
OutputFormat parse_format(std::string_view value, std::string_view field = "format");

}  // namespace fdqpt::cli
