#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "fdqpt/dqpt.hpp"
#include "fdqpt/dynamics.hpp"
#include "fdqpt/errors.hpp"
#include "fdqpt/geometry.hpp"
#include "fdqpt/grid.hpp"
#include "fdqpt/lattice.hpp"
#include "fdqpt/topology.hpp"

namespace fdqpt::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> k_grid(const RunConfig& cfg) { return uniform_grid(0.0, kPi, cfg.k_points); }
std::vector<double> t_grid(const RunConfig& cfg) {
    return uniform_grid(0.0, cfg.t_max, cfg.t_points);
}

Cell integer(long long value) { return Cell(static_cast<std::int64_t>(value)); }

double propagator_deviation(const ModelParams& params, double k, double t, int steps) {
    const OracleResult oracle = propagator_oracle(params, k, t, steps);
    return (oracle.propagator - propagator_analytic(params, k, t)).cwiseAbs().maxCoeff();
}

}  // namespace

CommandResult cmd_retprob(const RunConfig& cfg) {
    CommandResult res;
    res.table.columns = {"k", "t", "retprob"};
    const auto ts = t_grid(cfg);
    for (double k : k_grid(cfg)) {
        for (double t : ts) {
            res.table.rows.push_back({k, t, return_probability(cfg.params, cfg.band, k, t)});
        }
    }
    return res;
}

CommandResult cmd_rate(const RunConfig& cfg) {
    CommandResult res;
    res.table.columns = {"t", "g"};
    const auto ts = t_grid(cfg);
    const auto gs = rate_function_series(cfg.params, cfg.band, ts, cfg.k_points);
    for (std::size_t j = 0; j < ts.size(); ++j) res.table.rows.push_back({ts[j], gs[j]});
    return res;
}

CommandResult cmd_fisher(const RunConfig& cfg) {
    CommandResult res;
    res.table.columns = {"n", "k", "tau", "t_imag"};
    for (const FisherLine& line : fisher_lines(cfg.params, cfg.band, cfg.k_points, cfg.n_max)) {
        for (std::size_t j = 0; j < line.k.size(); ++j) {
            res.table.rows.push_back({integer(line.n), line.k[j], line.tau_of_k[j], line.t_imag});
        }
    }
    return res;
}

CommandResult cmd_geo(const RunConfig& cfg) {
    CommandResult res;
    res.table.columns = {"k", "t", "phase"};
    const auto ts = t_grid(cfg);
    for (double k : k_grid(cfg)) {
        for (double t : ts) {
            double phase = kNaN;
            try {
                phase = geometric_phase(cfg.params, cfg.band, k, t);
            } catch (const PhaseUndefined&) {
            }
            res.table.rows.push_back({k, t, phase});
        }
    }
    return res;
}

CommandResult cmd_winding(const RunConfig& cfg) {
    CommandResult res;
    res.table.columns = {"t", "nu", "raw"};
    for (double t : t_grid(cfg)) {
        try {
            const WindingResult w = winding_number(cfg.params, cfg.band, t, cfg.k_points);
            res.table.rows.push_back({t, integer(w.nu), w.raw});
        } catch (const NearCriticalTime&) {
            res.table.rows.push_back({t, kNaN, kNaN});
        }
    }
    return res;
}

CommandResult cmd_topo(const RunConfig& cfg) {
    CommandResult res;
    res.table.columns = {"quantity", "value"};
    const ChiralInvariants inv = chiral_winding_numbers(cfg.params, cfg.k_points);
    const CriticalSet crit = dqpt_condition(cfg.params, 3.0 * cfg.params.period());
    auto& rows = res.table.rows;
    rows.push_back({std::string("encircling"), integer(encircling_condition(cfg.params))});
    rows.push_back({std::string("W1"), integer(inv.w1)});
    rows.push_back({std::string("W2"), integer(inv.w2)});
    rows.push_back({std::string("W0"), integer(inv.w0)});
    rows.push_back({std::string("Wpi"), integer(inv.wpi)});
    rows.push_back({std::string("has_dqpt"), integer(crit.has_dqpt)});
    rows.push_back({std::string("k_c"), crit.k_c.value_or(kNaN)});
    for (std::size_t n = 0; n < 3; ++n) {
        const double tc = n < crit.critical_times.size() ? crit.critical_times[n] : kNaN;
        rows.push_back({"t_c" + std::to_string(n + 1), tc});
    }
    return res;
}

CommandResult cmd_spectrum(const RunConfig& cfg) {
    CommandResult res;
    res.table.columns = {"index", "quasienergy", "edge_weight", "pi_mode"};
    const FloquetSpectrum spectrum = obc_floquet_spectrum(cfg.params, cfg.sites, cfg.steps);
    for (std::size_t j = 0; j < spectrum.modes.size(); ++j) {
        const QuasiMode& m = spectrum.modes[j];
        res.table.rows.push_back({integer(static_cast<long long>(j)), m.quasienergy,
                                  m.edge_weight, integer(m.pi_mode)});
    }
    return res;
}

CommandResult cmd_oracle_check(const RunConfig& cfg) {
    CommandResult res;
    res.table.columns = {"check", "points", "max_deviation", "tolerance", "status"};

    double grid_worst = 0.0;
    double initial_worst = 0.0;
    long grid_points = 0;
    const auto ts = t_grid(cfg);
    for (double k : k_grid(cfg)) {
        for (double t : ts) {
            const double dev = propagator_deviation(cfg.params, k, t, cfg.steps);
            grid_worst = std::max(grid_worst, dev);
            if (t == 0.0) initial_worst = std::max(initial_worst, dev);
            ++grid_points;
        }
    }

    // Random gapped parameter draws, independent of the configured model.
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> drive(1.0, kTwoPi);
    std::uniform_real_distribution<double> coupling(-kPi, kPi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double random_worst = 0.0;
    int accepted = 0;
    while (accepted < cfg.draws) {
        ModelParams p;
        p.omega_drive = drive(rng);
        p.delta1 = coupling(rng);
        p.delta2 = coupling(rng);
        p.omega_amp = coupling(rng);
        const double k = kPi * unit(rng);
        const double t = 3.0 * p.period() * unit(rng);
        try {
            if (floquet_solution(p, k).gap < 1e-3) continue;
        } catch (const GaplessPoint&) {
            continue;
        }
        random_worst = std::max(random_worst, propagator_deviation(p, k, t, cfg.steps));
        ++accepted;
    }

    const auto add = [&](const char* name, long points, double worst) {
        const bool ok = worst <= kOracleTolerance;
        res.table.rows.push_back({std::string(name), integer(points), worst, kOracleTolerance,
                                  std::string(ok ? "pass" : "fail")});
        if (!ok) res.exit_code = 1;
    };
    add("grid", grid_points, grid_worst);
    add("t0", cfg.k_points, initial_worst);
    add("random", accepted, random_worst);
    return res;
}

CommandResult run_command(const RunConfig& cfg) {
    const std::string& c = cfg.command;
    if (c == "retprob") return cmd_retprob(cfg);
    if (c == "rate") return cmd_rate(cfg);
    if (c == "fisher") return cmd_fisher(cfg);
    if (c == "geo") return cmd_geo(cfg);
    if (c == "winding") return cmd_winding(cfg);
    if (c == "topo") return cmd_topo(cfg);
    if (c == "spectrum") return cmd_spectrum(cfg);
    if (c == "oracle-check") return cmd_oracle_check(cfg);
    throw ConfigError("unknown command '" + c + "'");
}

}  // namespace fdqpt::cli
