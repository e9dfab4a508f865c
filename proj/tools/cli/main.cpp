#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "config.hpp"
#include "fdqpt/errors.hpp"

namespace {

using namespace fdqpt::cli;

// Raw flag values; only options actually given are copied into the settings layer.
struct Flags {
    std::string config_path;
    std::string preset;
    std::string out;
    std::string format;
    std::string band;
    int k_points = 0;
    int t_points = 0;
    double t_max = 0.0;
    int sites = 0;
    int steps = 0;
    int n_max = 0;
    int draws = 0;
    std::uint64_t seed = 0;
};

struct BoundOptions {
    CLI::Option* config_path;
    CLI::Option* preset;
    CLI::Option* out;
    CLI::Option* format;
    CLI::Option* band;
    CLI::Option* k_points;
    CLI::Option* t_points;
    CLI::Option* t_max;
    CLI::Option* sites;
    CLI::Option* steps;
    CLI::Option* n_max;
    CLI::Option* draws;
    CLI::Option* seed;
};

BoundOptions add_options(CLI::App* sub, Flags& f) {
    BoundOptions o{};
    o.config_path = sub->add_option("--config", f.config_path, "Config file");
    o.preset = sub->add_option("--preset", f.preset,
                               "example1 | example2 | example3 | nv-plus | nv-minus");
    o.out = sub->add_option("--out", f.out, "Output file (default: standard output)");
    o.format = sub->add_option("--format", f.format, "csv | json");
    o.band = sub->add_option("--band", f.band, "minus | plus");
    o.k_points = sub->add_option("--k-points", f.k_points, "Quasimomentum grid size");
    o.t_points = sub->add_option("--t-points", f.t_points, "Time grid size");
    o.t_max = sub->add_option("--t-max", f.t_max, "Time grid end");
    o.sites = sub->add_option("--sites", f.sites, "Open-chain length (spectrum)");
    o.steps = sub->add_option("--steps", f.steps, "Integrator steps per period");
    o.n_max = sub->add_option("--n-max", f.n_max, "Number of Fisher-zero lines (fisher)");
    o.draws = sub->add_option("--draws", f.draws, "Random parameter draws (oracle-check)");
    o.seed = sub->add_option("--seed", f.seed, "Random seed (oracle-check)");
    return o;
}

ConfigSettings collect(const BoundOptions& o, const Flags& f) {
    ConfigSettings s;
    if (o.preset->count()) s.preset = f.preset;
    if (o.out->count()) s.out = f.out;
    if (o.format->count()) s.format = parse_format(f.format, "--format");
    if (o.band->count()) s.band = parse_band(f.band, "--band");
    if (o.k_points->count()) s.k_points = f.k_points;
    if (o.t_points->count()) s.t_points = f.t_points;
    if (o.t_max->count()) s.t_max = f.t_max;
    if (o.sites->count()) s.sites = f.sites;
    if (o.steps->count()) s.steps = f.steps;
    if (o.n_max->count()) s.n_max = f.n_max;
    if (o.draws->count()) s.draws = f.draws;
    if (o.seed->count()) s.seed = f.seed;
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Floquet dynamical quantum phase transitions in a driven two-level chain"};
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> descriptions = {
        {"retprob", "Return probability on a (k, t) grid"},
        {"rate", "Rate function g(t)"},
        {"fisher", "Lines of Fisher zeros"},
        {"geo", "Geometric phase on a (k, t) grid"},
        {"winding", "Dynamical winding number nu(t)"},
        {"topo", "Chiral winding numbers and DQPT verdict"},
        {"spectrum", "Open-chain Floquet spectrum with pi-mode flags"},
        {"oracle-check", "Analytic propagator against the time-ordered integrator"},
    };
    Flags flags;
    std::vector<std::pair<CLI::App*, BoundOptions>> subs;
    for (const auto& [name, text] : descriptions) {
        CLI::App* sub = app.add_subcommand(name, text);
        subs.emplace_back(sub, add_options(sub, flags));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        for (const auto& [sub, opts] : subs) {
            if (!sub->parsed()) continue;
            ConfigDocument file;
            if (opts.config_path->count()) file = load_config(flags.config_path);
            const RunConfig cfg = resolve_config(sub->get_name(), file, collect(opts, flags));

            const CommandResult result = run_command(cfg);
            if (cfg.out.empty()) {
                write_table(std::cout, result.table, cfg.format);
                std::cout.flush();
            } else {
                std::ofstream out(cfg.out, std::ios::binary);
                if (!out) throw ConfigError("cannot open output file '" + cfg.out + "'");
                write_table(out, result.table, cfg.format);
                if (!out) throw ConfigError("failed writing '" + cfg.out + "'");
            }
            return result.exit_code;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const fdqpt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
