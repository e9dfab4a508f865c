#include "fdqpt/dqpt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fdqpt/dynamics.hpp"
#include "fdqpt/errors.hpp"
#include "fdqpt/grid.hpp"

namespace fdqpt {

bool satisfies_dqpt_condition(const ModelParams& params) {
    return std::abs(params.omega_drive - params.delta2) <= std::abs(params.delta1);
}

CriticalSet dqpt_condition(const ModelParams& params, std::optional<double> t_max) {
    params.validate();
    const double detuning = params.omega_drive - params.delta2;
    if (params.delta1 == 0.0 && detuning == 0.0) {
        throw DegenerateDelta1("delta1 = 0 and omega = delta2: every quasimomentum is critical");
    }
    CriticalSet out;
    out.has_dqpt = satisfies_dqpt_condition(params);
    if (!out.has_dqpt) return out;

    const double ratio = detuning / params.delta1;
    out.k_c = std::acos(std::clamp(ratio, -1.0, 1.0));

    const double period = params.period();
    const double horizon = t_max.value_or(3.0 * period);
    for (int n = 1;; ++n) {
        const double tc = (2 * n - 1) * period / 2.0;
        if (tc > horizon) break;
        out.critical_times.push_back(tc);
    }
    return out;
}

double fisher_tau(const ModelParams& params, Band band, double k) {
    const auto [h_xy, h_z] = bloch_components(params, k);
    if (h_xy == 0.0) {
        throw UndefinedTau("h_xy vanishes: tau -> -inf", false);
    }
    const FloquetSolution sol = floquet_solution(params, k);
    const double offset = sol.energy(band) - h_z;
    if (offset == 0.0) {
        throw UndefinedTau("E = h_z: tau -> +inf", true);
    }
    return std::log((h_xy * h_xy) / (offset * offset)) / params.omega_drive;
}

std::vector<FisherLine> fisher_lines(const ModelParams& params, Band band, int k_points,
                                     int n_max) {
    const std::vector<double> ks = uniform_grid(0.0, kPi, k_points);
    std::vector<double> taus(ks.size());
    for (std::size_t j = 0; j < ks.size(); ++j) {
        try {
            taus[j] = fisher_tau(params, band, ks[j]);
        } catch (const UndefinedTau& e) {
            taus[j] = (e.positive() ? 1.0 : -1.0) * std::numeric_limits<double>::infinity();
        }
    }
    std::vector<FisherLine> lines;
    lines.reserve(static_cast<std::size_t>(std::max(n_max, 0)));
    for (int n = 1; n <= n_max; ++n) {
        lines.push_back({n, ks, taus, (2 * n - 1) * params.period() / 2.0});
    }
    return lines;
}

double rate_function(const ModelParams& params, Band band, double t, int k_points) {
    if (k_points < 2) throw InvalidSize("rate_function needs k_points >= 2");
    params.validate();
    const std::vector<double> ks = uniform_grid(0.0, kPi, k_points);
    std::vector<double> integrand(ks.size());

#pragma omp parallel for schedule(static)
    for (long j = 0; j < static_cast<long>(ks.size()); ++j) {
        double prob = 1.0;
        try {
            prob = return_probability(params, band, ks[static_cast<std::size_t>(j)], t);
        } catch (const GaplessPoint&) {
            // Gap closes only where h_xy = 0; sz eigenstates then return with |G| = 1.
        }
        integrand[static_cast<std::size_t>(j)] = std::log(std::max(prob, kProbFloor));
    }

    double sum = 0.0;
    for (double v : integrand) sum += v;
    sum -= 0.5 * (integrand.front() + integrand.back());
    const double dk = kPi / (k_points - 1);
    return 0.0 - sum * dk / kPi;
}

std::vector<double> rate_function_series(const ModelParams& params, Band band,
                                         const std::vector<double>& times, int k_points) {
    std::vector<double> out;
    out.reserve(times.size());
    for (double t : times) out.push_back(rate_function(params, band, t, k_points));
    return out;
}

}  // namespace fdqpt
