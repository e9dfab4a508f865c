#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "fdqpt/errors.hpp"
#include "fdqpt/presets.hpp"

namespace fdqpt::cli {

namespace {

enum class Group { model, grid, run };

struct Field {
    const char* key;
    Group group;
    // Parses `value` into `s`; throws ConfigError with a bare message.
    std::function<void(ConfigSettings& s, std::string_view value)> parse;
    // Canonical text, or nullopt when unset.
    std::function<std::optional<std::string>(const ConfigSettings& s)> print;
};

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_plain_double(std::string_view s, double& out) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc() && ptr == end;
}

// A number, or a multiple of pi: "pi", "-pi/5", "2*pi", "3*pi/4".
double parse_real(std::string_view s) {
    double value = 0.0;
    if (parse_plain_double(s, value)) {
        if (!std::isfinite(value)) throw ConfigError("expected a finite number");
        return value;
    }
    double sign = 1.0;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        if (s.front() == '-') sign = -1.0;
        s.remove_prefix(1);
    }
    const auto pi_pos = s.find("pi");
    if (pi_pos == std::string_view::npos) throw ConfigError("expected a number");
    double factor = 1.0;
    if (pi_pos > 0) {
        std::string_view lhs = s.substr(0, pi_pos);
        if (lhs.back() != '*' || !parse_plain_double(lhs.substr(0, lhs.size() - 1), factor)) {
            throw ConfigError("expected a number or a multiple of pi");
        }
    }
    std::string_view rest = s.substr(pi_pos + 2);
    double divisor = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/' || !parse_plain_double(rest.substr(1), divisor) || divisor == 0.0) {
            throw ConfigError("expected a number or a multiple of pi");
        }
    }
    value = sign * factor * kPi / divisor;
    if (!std::isfinite(value)) throw ConfigError("expected a finite number");
    return value;
}

int parse_int(std::string_view s) {
    int value = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc() || ptr != end) throw ConfigError("expected an integer");
    return value;
}

std::uint64_t parse_u64(std::string_view s) {
    std::uint64_t value = 0;
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc() || ptr != end) throw ConfigError("expected a non-negative integer");
    return value;
}

std::string parse_text(std::string_view s) {
    if (s.empty()) throw ConfigError("expected a value");
    return std::string(s);
}

template <typename T>
std::function<std::optional<std::string>(const ConfigSettings&)> printer(
    std::optional<T> ConfigSettings::*member) {
    return [member](const ConfigSettings& s) -> std::optional<std::string> {
        const auto& v = s.*member;
        if (!v) return std::nullopt;
        if constexpr (std::is_same_v<T, double>) {
            return format_double(*v);
        } else if constexpr (std::is_same_v<T, std::string>) {
            return *v;
        } else if constexpr (std::is_same_v<T, Band>) {
            return std::string(fdqpt::to_string(*v));
        } else if constexpr (std::is_same_v<T, OutputFormat>) {
            return std::string(to_string(*v));
        } else {
            return std::to_string(*v);
        }
    };
}

const std::vector<Field>& fields() {
    static const std::vector<Field> table = {
        {"preset", Group::model,
         [](ConfigSettings& s, std::string_view v) {
             if (!find_preset(v)) throw ConfigError("unknown preset '" + std::string(v) + "'");
             s.preset = std::string(v);
         },
         printer(&ConfigSettings::preset)},
        {"omega_drive", Group::model,
         [](ConfigSettings& s, std::string_view v) { s.omega_drive = parse_real(v); },
         printer(&ConfigSettings::omega_drive)},
        {"delta1", Group::model,
         [](ConfigSettings& s, std::string_view v) { s.delta1 = parse_real(v); },
         printer(&ConfigSettings::delta1)},
        {"delta2", Group::model,
         [](ConfigSettings& s, std::string_view v) { s.delta2 = parse_real(v); },
         printer(&ConfigSettings::delta2)},
        {"omega_amp", Group::model,
         [](ConfigSettings& s, std::string_view v) { s.omega_amp = parse_real(v); },
         printer(&ConfigSettings::omega_amp)},
        {"time_unit", Group::model,
         [](ConfigSettings& s, std::string_view v) { s.time_unit = parse_text(v); },
         printer(&ConfigSettings::time_unit)},
        {"band", Group::grid,
         [](ConfigSettings& s, std::string_view v) { s.band = parse_band(v, ""); },
         printer(&ConfigSettings::band)},
        {"k_points", Group::grid,
         [](ConfigSettings& s, std::string_view v) { s.k_points = parse_int(v); },
         printer(&ConfigSettings::k_points)},
        {"t_points", Group::grid,
         [](ConfigSettings& s, std::string_view v) { s.t_points = parse_int(v); },
         printer(&ConfigSettings::t_points)},
        {"t_max", Group::grid,
         [](ConfigSettings& s, std::string_view v) { s.t_max = parse_real(v); },
         printer(&ConfigSettings::t_max)},
        {"sites", Group::run,
         [](ConfigSettings& s, std::string_view v) { s.sites = parse_int(v); },
         printer(&ConfigSettings::sites)},
        {"steps", Group::run,
         [](ConfigSettings& s, std::string_view v) { s.steps = parse_int(v); },
         printer(&ConfigSettings::steps)},
        {"n_max", Group::run,
         [](ConfigSettings& s, std::string_view v) { s.n_max = parse_int(v); },
         printer(&ConfigSettings::n_max)},
        {"draws", Group::run,
         [](ConfigSettings& s, std::string_view v) { s.draws = parse_int(v); },
         printer(&ConfigSettings::draws)},
        {"seed", Group::run,
         [](ConfigSettings& s, std::string_view v) { s.seed = parse_u64(v); },
         printer(&ConfigSettings::seed)},
        {"format", Group::run,
         [](ConfigSettings& s, std::string_view v) { s.format = parse_format(v, ""); },
         printer(&ConfigSettings::format)},
        {"out", Group::run,
         [](ConfigSettings& s, std::string_view v) { s.out = parse_text(v); },
         printer(&ConfigSettings::out)},
    };
    return table;
}

const char* group_name(Group g) {
    switch (g) {
        case Group::model: return "model";
        case Group::grid: return "grid";
        case Group::run: return "run";
    }
    return "";
}

bool is_command(std::string_view name) {
    const auto& names = command_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

template <typename T>
void take(std::optional<T>& dst, const std::optional<T>& src) {
    if (src) dst = src;
}

struct CommandDefaults {
    int k_points;
    int t_points;
    int steps;
};

CommandDefaults defaults_for(const std::string& command) {
    if (command == "rate") return {2001, 601, 2048};
    if (command == "fisher") return {201, 2, 2048};
    if (command == "winding") return {2001, 121, 2048};
    if (command == "topo") return {4001, 2, 2048};
    if (command == "oracle-check") return {13, 13, 4096};
    return {101, 201, 2048};  // retprob, geo, spectrum
}

}  // namespace

const char* to_string(OutputFormat format) {
    return format == OutputFormat::json ? "json" : "csv";
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {
        "retprob", "rate", "fisher", "geo", "winding", "topo", "spectrum", "oracle-check"};
    return names;
}

Band parse_band(std::string_view value, std::string_view field) {
    if (value == "minus") return Band::minus;
    if (value == "plus") return Band::plus;
    std::string msg;
    if (!field.empty()) msg = "field '" + std::string(field) + "': ";
    throw ConfigError(msg + "band must be 'minus' or 'plus', got '" + std::string(value) + "'");
}

OutputFormat parse_format(std::string_view value, std::string_view field) {
    if (value == "csv") return OutputFormat::csv;
    if (value == "json") return OutputFormat::json;
    std::string msg;
    if (!field.empty()) msg = "field '" + std::string(field) + "': ";
    throw ConfigError(msg + "format must be 'csv' or 'json', got '" + std::string(value) + "'");
}

void ConfigSettings::merge(const ConfigSettings& top) {
    take(preset, top.preset);
    take(omega_drive, top.omega_drive);
    take(delta1, top.delta1);
    take(delta2, top.delta2);
    take(omega_amp, top.omega_amp);
    take(time_unit, top.time_unit);
    take(band, top.band);
    take(k_points, top.k_points);
    take(t_points, top.t_points);
    take(t_max, top.t_max);
    take(sites, top.sites);
    take(steps, top.steps);
    take(n_max, top.n_max);
    take(draws, top.draws);
    take(seed, top.seed);
    take(format, top.format);
    take(out, top.out);
}

ConfigDocument parse_config(std::string_view text, std::string_view source) {
    ConfigDocument doc;
    std::string section;
    std::map<std::string, std::map<std::string, int>> seen;  // section -> key -> line
    int line_no = 0;

    const auto fail = [&](const std::string& what) {
        std::ostringstream msg;
        msg << source << ":" << line_no << ": " << what;
        throw ConfigError(msg.str());
    };

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        const std::string_view raw =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#' || line.front() == ';') continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail("unterminated section header");
            const std::string name(trim(line.substr(1, line.size() - 2)));
            if (name != "model" && name != "grid" && name != "run" && !is_command(name)) {
                fail("unknown section [" + name + "]");
            }
            section = name;
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) fail("expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (section.empty()) fail("field '" + key + "' appears before any section header");

        const auto& table = fields();
        const auto it = std::find_if(table.begin(), table.end(),
                                     [&](const Field& f) { return key == f.key; });
        if (it == table.end()) fail("unknown field '" + key + "' in [" + section + "]");

        const bool command_section = is_command(section);
        if (command_section ? it->group == Group::model : section != group_name(it->group)) {
            fail("field '" + key + "' belongs in [" + group_name(it->group) + "]" +
                 (it->group == Group::model ? "" : " or a command section"));
        }
        auto [where, inserted] = seen[section].emplace(key, line_no);
        if (!inserted) {
            fail("field '" + key + "' repeated (first set on line " +
                 std::to_string(where->second) + ")");
        }

        ConfigSettings& target = command_section ? doc.per_command[section] : doc.common;
        try {
            it->parse(target, value);
        } catch (const ConfigError& e) {
            fail("field '" + key + "': " + e.what());
        }
    }
    return doc;
}

ConfigDocument load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

std::string serialize_config(const ConfigDocument& doc) {
    std::ostringstream out;
    bool first_section = true;
    const auto emit = [&](const std::string& header, const ConfigSettings& s,
                          std::optional<Group> only) {
        std::ostringstream body;
        for (const Field& f : fields()) {
            if (only && f.group != *only) continue;
            if (const auto text = f.print(s)) body << f.key << " = " << *text << "\n";
        }
        if (body.str().empty()) return;
        if (!first_section) out << "\n";
        first_section = false;
        out << "[" << header << "]\n" << body.str();
    };
    emit("model", doc.common, Group::model);
    emit("grid", doc.common, Group::grid);
    emit("run", doc.common, Group::run);
    for (const std::string& name : command_names()) {
        const auto it = doc.per_command.find(name);
        if (it != doc.per_command.end()) emit(name, it->second, std::nullopt);
    }
    return out.str();
}

void RunConfig::validate() const {
    const auto fail = [](const std::string& what) { throw ConfigError(what); };
    if (k_points < 2) fail("field 'k_points': must be at least 2, got " + std::to_string(k_points));
    if (t_points < 2) fail("field 't_points': must be at least 2, got " + std::to_string(t_points));
    if (!(t_max > 0.0) || !std::isfinite(t_max)) {
        fail("field 't_max': must be positive, got " + format_double(t_max));
    }
    if (sites < 2) fail("field 'sites': must be at least 2, got " + std::to_string(sites));
    if (steps < 1) fail("field 'steps': must be positive, got " + std::to_string(steps));
    if (n_max < 1) fail("field 'n_max': must be at least 1, got " + std::to_string(n_max));
    if (draws < 0) fail("field 'draws': must be non-negative, got " + std::to_string(draws));
    try {
        params.validate();
    } catch (const InvalidParams& e) {
        fail(std::string("model parameters: ") + e.what());
    }
}

RunConfig resolve_config(const std::string& command, const ConfigDocument& file,
                         const ConfigSettings& flags) {
    if (!is_command(command)) throw ConfigError("unknown command '" + command + "'");

    ConfigSettings merged = file.common;
    if (const auto it = file.per_command.find(command); it != file.per_command.end()) {
        merged.merge(it->second);
    }
    merged.merge(flags);

    RunConfig cfg;
    cfg.command = command;
    const CommandDefaults defaults = defaults_for(command);
    cfg.k_points = defaults.k_points;
    cfg.t_points = defaults.t_points;
    cfg.steps = defaults.steps;

    if (merged.preset) {
        const auto preset = find_preset(*merged.preset);
        if (!preset) throw ConfigError("unknown preset '" + *merged.preset + "'");
        cfg.preset = preset->name;
        cfg.params = preset->params;
        cfg.time_unit = preset->time_unit;
    }
    if (merged.omega_drive) cfg.params.omega_drive = *merged.omega_drive;
    if (merged.delta1) cfg.params.delta1 = *merged.delta1;
    if (merged.delta2) cfg.params.delta2 = *merged.delta2;
    if (merged.omega_amp) cfg.params.omega_amp = *merged.omega_amp;
    if (merged.time_unit) cfg.time_unit = *merged.time_unit;

    if (merged.band) cfg.band = *merged.band;
    if (merged.k_points) cfg.k_points = *merged.k_points;
    if (merged.t_points) cfg.t_points = *merged.t_points;
    if (merged.sites) cfg.sites = *merged.sites;
    if (merged.steps) cfg.steps = *merged.steps;
    if (merged.n_max) cfg.n_max = *merged.n_max;
    if (merged.draws) cfg.draws = *merged.draws;
    if (merged.seed) cfg.seed = *merged.seed;
    if (merged.format) cfg.format = *merged.format;
    if (merged.out) cfg.out = *merged.out;

    try {
        cfg.params.validate();
    } catch (const InvalidParams& e) {
        throw ConfigError(std::string("model parameters: ") + e.what());
    }
    // Three drive periods unless set.
    cfg.t_max = merged.t_max ? *merged.t_max : 3.0 * cfg.params.period();
    cfg.validate();
    return cfg;
}

}  // namespace fdqpt::cli
