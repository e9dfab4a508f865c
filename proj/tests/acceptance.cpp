// One PASS/FAIL line per acceptance criterion, with wall-clock runtime.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "fdqpt/dqpt.hpp"
#include "fdqpt/dynamics.hpp"
#include "fdqpt/errors.hpp"
#include "fdqpt/geometry.hpp"
#include "fdqpt/lattice.hpp"
#include "fdqpt/presets.hpp"
#include "fdqpt/topology.hpp"
#include "support/oracles.hpp"

using namespace fdqpt;

namespace {

ModelParams preset(const char* name) { return find_preset(name)->params; }

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome r{false, ""};
    try {
        r = body();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_s > 0 && secs > budget_s) {
        r.pass = false;
        r.detail += " (over budget " + std::to_string(budget_s) + " s)";
    }
    failures += !r.pass;
    std::printf("%s criterion %d: %s [%.3f s] %s\n", r.pass ? "PASS" : "FAIL", id, title, secs,
                r.detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

bool gapped(const ModelParams& p, double k, double min_gap) {
    try {
        return floquet_solution(p, k).gap > min_gap;
    } catch (const GaplessPoint&) {
        return false;
    }
}

Outcome dqpt_condition_examples() {
    const CriticalSet one = dqpt_condition(preset("example1"));
    const CriticalSet two = dqpt_condition(preset("example2"));
    const CriticalSet three = dqpt_condition(preset("example3"));
    const bool ok = one.has_dqpt && one.k_c && std::abs(*one.k_c - kPi / 3) < 1e-12 &&
                    !two.has_dqpt && !two.k_c && three.has_dqpt && three.k_c &&
                    std::abs(*three.k_c - 2 * kPi / 3) < 1e-12;
    return {ok, ""};
}

Outcome experiment_figures() {
    const ModelParams plus = preset("nv-plus");
    double worst_zero = 0.0;
    for (double t : {0.1, 0.3, 0.5}) {
        worst_zero = std::max(worst_zero, return_probability(plus, Band::minus, kPi / 2, t));
    }
    bool nu_ok = true;
    const double times[] = {0.15, 0.35, 0.55};
    for (int i = 0; i < 3; ++i) nu_ok &= winding_number(plus, Band::minus, times[i]).nu == i + 1;

    const ModelParams minus = preset("nv-minus");
    double smallest = 1.0;
    bool flat = true;
    for (double t : nv_sampling_times()) {
        for (int j = 0; j < 13; ++j) {
            smallest = std::min(smallest, return_probability(minus, Band::minus, kPi * j / 12, t));
        }
        flat &= winding_number(minus, Band::minus, t).nu == 0;
    }
    return {worst_zero < 1e-10 && nu_ok && smallest > 0.0 && flat,
            "max |G|^2 at t_c " + fmt("%.2e", worst_zero) + ", nv-minus min " +
                fmt("%.3e", smallest)};
}

Outcome rate_kinks() {
    const ModelParams p = preset("example1");
    bool ok = true;
    double worst_ratio = 1e300;
    for (double tc : {1.0, 3.0, 5.0}) {
        const oracle::KinkReport r = oracle::analyze_kink(p, Band::minus, tc, 2001);
        ok &= r.local_max && r.left_slope > 0 && r.right_slope < 0 && r.jump > 10 * r.noise;
        worst_ratio = std::min(worst_ratio, r.jump / r.noise);
    }
    for (int n = 0; n <= 3; ++n) ok &= rate_function(p, Band::minus, n * p.period()) < 1e-10;
    return {ok, "smallest jump/noise " + fmt("%.3g", worst_ratio)};
}

Outcome geometric_pi_jump() {
    const ModelParams p = preset("example1");
    const double period = p.period();
    const double kc = kPi / 3;
    double worst = 0.0;
    for (int n = 0; n < 3; ++n) {
        const double tc = (n + 0.5) * period;
        const double before = n % 2 == 0 ? 0.0 : kPi;
        const double after = n % 2 == 0 ? kPi : 0.0;
        worst = std::max(worst, oracle::angle_distance(
                                    geometric_phase(p, Band::minus, kc, tc - period / 1000), before));
        worst = std::max(worst, oracle::angle_distance(
                                    geometric_phase(p, Band::minus, kc, tc + period / 1000), after));
    }
    return {worst < 1e-10, "max error " + fmt("%.2e", worst)};
}

Outcome oracle_equivalence() {
    oracle::Gen gen(20240607);
    double worst = 0.0;
    int draws = 0;
    while (draws < 100) {
        const ModelParams p = gen.params();
        const double k = gen.uniform(0, kPi);
        const double t = gen.uniform(0, 3 * p.period());
        if (!gapped(p, k, 0.01)) continue;
        const OracleResult o = propagator_oracle(p, k, t, 4096);
        worst = std::max(worst, oracle::max_abs(o.propagator - propagator_analytic(p, k, t)));
        ++draws;
    }
    return {worst < 1e-7, "max deviation " + fmt("%.2e", worst)};
}

Outcome topology() {
    const ChiralInvariants one = chiral_winding_numbers(preset("example1"));
    const ChiralInvariants two = chiral_winding_numbers(preset("example2"));
    const ChiralInvariants three = chiral_winding_numbers(preset("example3"));
    bool ok = one.w0 == 0 && one.wpi == 1 && two.w0 == 0 && two.wpi == 0 && std::abs(three.wpi) == 1;

    oracle::Gen gen(61);
    int checked = 0;
    while (checked < 200) {
        const ModelParams p = gen.params();
        try {
            const ChiralInvariants inv = chiral_winding_numbers(p);
            ok &= inv.w2 == -inv.w1;
            ++checked;
        } catch (const GapClosure&) {
        }
    }
    checked = 0;
    while (checked < 50) {
        const ModelParams p = gen.params();
        if (std::abs(p.omega_amp) < 0.05) continue;
        if (std::abs(std::abs(p.omega_drive - p.delta2) - std::abs(p.delta1)) < 0.05) continue;
        ok &= dqpt_condition(p).has_dqpt == (chiral_winding_numbers(p).wpi != 0);
        ++checked;
    }
    return {ok, ""};
}

Outcome momentum_pipeline() {
    double worst = 0.0;
    for (const char* name : {"example1", "example2", "example3"}) {
        worst = std::max(worst, momentum_consistency_check(preset(name), 16));
    }
    return {worst < 1e-10, "max deviation " + fmt("%.2e", worst)};
}

Outcome bulk_boundary() {
    const ModelParams one = preset("example1");
    const double w = one.omega_drive;
    const FloquetSpectrum s40 = obc_floquet_spectrum(one, 40);
    const FloquetSpectrum s80 = obc_floquet_spectrum(one, 80);
    const FloquetSpectrum trivial = obc_floquet_spectrum(preset("example2"), 40);
    const double pin40 = s40.pi_mode_pinning(w);
    const double pin80 = s80.pi_mode_pinning(w);
    const bool ok = s40.pi_pair_count() >= 1 && trivial.pi_mode_count() == 0 && pin80 < pin40;
    return {ok, "pinning N=40 " + fmt("%.2e", pin40) + ", N=80 " + fmt("%.2e", pin80)};
}

Outcome tomography() {
    oracle::Gen gen(90);
    double worst = 0.0;
    int draws = 0;
    while (draws < 50) {
        const ModelParams p = gen.params();
        const double k = gen.uniform(0.05, kPi - 0.05);
        const double t = gen.uniform(0, 3 * p.period());
        if (!gapped(p, k, 1e-3)) continue;
        if (std::abs(return_amplitude(p, Band::minus, k, t).value) <= 0.1) continue;
        worst = std::max(worst, oracle::angle_distance(
                                    geometric_phase_from_tomography(p, Band::minus, k, t),
                                    geometric_phase(p, Band::minus, k, t)));
        ++draws;
    }
    return {worst < 1e-8, "max deviation " + fmt("%.2e", worst)};
}

}  // namespace

int main() {
    criterion(1, "DQPT condition and critical data", 1e-3, dqpt_condition_examples);
    criterion(2, "experiment return probabilities and winding", 5.0, experiment_figures);
    criterion(3, "rate-function kinks", 30.0, rate_kinks);
    criterion(4, "geometric-phase pi jump", 0.0, geometric_pi_jump);
    criterion(5, "analytic vs time-ordered propagator", 10.0, oracle_equivalence);
    criterion(6, "chiral winding numbers", 0.0, topology);
    criterion(7, "momentum-space consistency of the chain", 0.0, momentum_pipeline);
    criterion(8, "pi edge modes of the open chain", 60.0, bulk_boundary);
    criterion(9, "geometric phase from tomography", 0.0, tomography);
    return failures == 0 ? 0 : 1;
}
