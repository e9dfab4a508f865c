#include <doctest.h>

#include "fdqpt/dqpt.hpp"
#include "fdqpt/errors.hpp"
#include "fdqpt/presets.hpp"
#include "fdqpt/topology.hpp"
#include "support/oracles.hpp"

using namespace fdqpt;

namespace {

ModelParams preset(const char* name) { return find_preset(name)->params; }

bool near_critical_time(const ModelParams& p, double t, double margin) {
    if (!satisfies_dqpt_condition(p)) return false;
    const double period = p.period();
    const double x = t / period - 0.5;
    return std::abs(x - std::round(x)) * period < margin;
}

}  // namespace

TEST_SUITE("dqpt") {

TEST_CASE("critical data for the three reference parameter sets") {
    const CriticalSet one = dqpt_condition(preset("example1"));
    CHECK(one.has_dqpt);
    REQUIRE(one.k_c.has_value());
    CHECK(std::abs(*one.k_c - kPi / 3) < 1e-12);
    REQUIRE(one.critical_times.size() == 3);
    CHECK(one.critical_times[0] == 1.0);
    CHECK(one.critical_times[1] == 3.0);
    CHECK(one.critical_times[2] == 5.0);

    const CriticalSet two = dqpt_condition(preset("example2"));
    CHECK_FALSE(two.has_dqpt);
    CHECK_FALSE(two.k_c.has_value());
    CHECK(two.critical_times.empty());

    const CriticalSet three = dqpt_condition(preset("example3"));
    CHECK(three.has_dqpt);
    REQUIRE(three.k_c.has_value());
    CHECK(std::abs(*three.k_c - 2 * kPi / 3) < 1e-12);
}

TEST_CASE("boundary and degenerate cases of the condition") {
    ModelParams p = preset("example1");
    p.delta2 = p.omega_drive;
    const CriticalSet edge = dqpt_condition(p);
    CHECK(edge.has_dqpt);
    CHECK(std::abs(*edge.k_c - kPi / 2) < 1e-15);

    p.delta1 = 0.0;
    CHECK_THROWS_AS(dqpt_condition(p), DegenerateDelta1);

    p = preset("example1");
    p.delta1 = 0.0;  // far from resonance: no critical momentum, no error
    CHECK_FALSE(dqpt_condition(p).has_dqpt);

    const CriticalSet longer = dqpt_condition(preset("example1"), 10.0);
    CHECK(longer.critical_times.size() == 5);
}

TEST_CASE("fisher tau examples") {
    const ModelParams p = preset("example1");
    CHECK(std::abs(fisher_tau(p, Band::minus, kPi / 3)) < 1e-10);
    CHECK_THROWS_AS(fisher_tau(p, Band::minus, 0.0), UndefinedTau);
    try {
        fisher_tau(p, Band::minus, 0.0);
    } catch (const UndefinedTau& e) {
        CHECK_FALSE(e.positive());
    }
    CHECK(fisher_tau(p, Band::minus, 1e-6) < fisher_tau(p, Band::minus, 1e-3));

    const double tau = fisher_tau(p, Band::minus, kPi / 2);
    const double ref = oracle::bisect_tau(p, Band::minus, kPi / 2);
    CHECK(std::abs(tau - ref) < 1e-10);
    CHECK((tau > 0) == (ref > 0));
}

TEST_CASE("fisher lines") {
    const ModelParams p = preset("example1");
    const auto lines = fisher_lines(p, Band::minus, 301, 3);
    REQUIRE(lines.size() == 3);
    for (const FisherLine& line : lines) {
        CHECK(line.t_imag == (2 * line.n - 1) * p.period() / 2);
        CHECK(line.tau_of_k.front() == -std::numeric_limits<double>::infinity());
        CHECK(line.tau_of_k.back() == -std::numeric_limits<double>::infinity());
        CHECK(std::abs(line.tau_of_k[100]) < 1e-10);  // k = pi/3
        CHECK(line.tau_of_k[99] * line.tau_of_k[101] < 0);
    }

    const auto flat = fisher_lines(preset("example2"), Band::minus, 2001, 1);
    int positive = 0;
    int negative = 0;
    for (double tau : flat.front().tau_of_k) {
        if (!std::isfinite(tau)) continue;
        (tau > 0 ? positive : negative)++;
    }
    CHECK(positive * negative == 0);
}

TEST_CASE("rate function examples") {
    oracle::Gen gen(31);
    for (int i = 0; i < 10; ++i) {
        const ModelParams p = gen.params();
        CHECK(std::abs(rate_function(p, Band::minus, 0.0, 401)) < 1e-13);
    }

    const ModelParams p = preset("example1");
    for (int n = 0; n <= 3; ++n) CHECK(rate_function(p, Band::minus, n * p.period()) < 1e-10);

    const auto series = rate_function_series(p, Band::minus, {0.3, 0.3 + p.period()});
    CHECK(std::abs(series[0] - series[1]) < 1e-10);
    CHECK(series[0] == rate_function(p, Band::minus, 0.3));
}

TEST_CASE("rate function kink at the first critical time") {
    const ModelParams p = preset("example1");
    const oracle::KinkReport coarse = oracle::analyze_kink(p, Band::minus, 1.0, 2001);
    CHECK(coarse.local_max);
    CHECK(coarse.left_slope > 0);
    CHECK(coarse.right_slope < 0);
    CHECK(coarse.jump > 10 * coarse.noise);

    const oracle::KinkReport fine = oracle::analyze_kink(p, Band::minus, 1.0, 20001);
    CHECK(std::abs(fine.jump - coarse.jump) < 0.05 * fine.jump);
}

TEST_CASE("property: periodicity of the rate function") {
    oracle::Gen gen(32);
    for (int i = 0; i < 20; ++i) {
        const ModelParams p = gen.params();
        const double t = gen.uniform(0, 2 * p.period());
        try {
            const double a = rate_function(p, Band::minus, t, 401);
            const double b = rate_function(p, Band::minus, t + p.period(), 401);
            CHECK(std::abs(a - b) < 1e-10);
        } catch (const GaplessPoint&) {
        }
    }
}

TEST_CASE("property: k-grid convergence away from critical times") {
    oracle::Gen gen(33);
    int checked = 0;
    while (checked < 20) {
        const ModelParams p = gen.params();
        const double t = gen.uniform(0, 3 * p.period());
        if (near_critical_time(p, t, p.period() / 100)) continue;
        const double a = rate_function(p, Band::minus, t, 2001);
        const double b = rate_function(p, Band::minus, t, 4001);
        CHECK(std::abs(a - b) < 1e-4);
        ++checked;
    }
}

TEST_CASE("property: fisher-line crossings") {
    oracle::Gen gen(34);
    int crossing = 0;
    int flat = 0;
    while (crossing < 30 || flat < 30) {
        const ModelParams p = gen.params();
        if (std::abs(p.omega_amp) < 0.05) continue;
        const bool has = satisfies_dqpt_condition(p);
        if (has) {
            const double kc = *dqpt_condition(p).k_c;
            if (std::sin(kc) < 1e-2 || crossing >= 30) continue;
            for (Band band : {Band::minus, Band::plus}) {
                CHECK(std::abs(fisher_tau(p, band, kc)) < 1e-10);
            }
            ++crossing;
        } else {
            if (flat >= 30) continue;
            try {
                const auto line = fisher_lines(p, Band::minus, 2001, 1).front();
                int positive = 0;
                int negative = 0;
                for (double tau : line.tau_of_k) {
                    if (!std::isfinite(tau)) continue;
                    (tau > 0 ? positive : negative)++;
                }
                CHECK(positive * negative == 0);
                ++flat;
            } catch (const GaplessPoint&) {
            }
        }
    }
}

TEST_CASE("property: fisher tau agrees with bisection and flips with the band") {
    oracle::Gen gen(35);
    int checked = 0;
    while (checked < 50) {
        const ModelParams p = gen.params();
        const double k = gen.uniform(0.05, kPi - 0.05);
        double tau = 0.0;
        try {
            if (floquet_solution(p, k).gap < 1e-2) continue;
            tau = fisher_tau(p, Band::minus, k);
        } catch (const Error&) {
            continue;
        }
        if (std::abs(tau * p.omega_drive) > 10.0) continue;  // keep |a|^2/|b|^2 resolvable
        CHECK(std::abs(tau - oracle::bisect_tau(p, Band::minus, k)) < 1e-9);
        CHECK(std::abs(fisher_tau(p, Band::plus, k) + tau) < 1e-9);
        ++checked;
    }
}

TEST_CASE("property: DQPT condition matches the pi winding number") {
    oracle::Gen gen(36);
    int checked = 0;
    int with = 0;
    while (checked < 50) {
        const ModelParams p = gen.params();
        if (std::abs(p.omega_amp) < 0.05) continue;
        if (std::abs(std::abs(p.omega_drive - p.delta2) - std::abs(p.delta1)) < 0.05) continue;
        const ChiralInvariants inv = chiral_winding_numbers(p);
        const bool has = dqpt_condition(p).has_dqpt;
        CHECK(has == (inv.wpi != 0));
        with += has;
        ++checked;
    }
    CHECK(with > 5);
    CHECK(with < 45);
}

}  // TEST_SUITE
