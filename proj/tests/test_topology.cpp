#include <doctest.h>

#include <algorithm>
#include <array>

#include "fdqpt/dqpt.hpp"
#include "fdqpt/dynamics.hpp"
#include "fdqpt/errors.hpp"
#include "fdqpt/presets.hpp"
#include "fdqpt/topology.hpp"
#include "support/oracles.hpp"

using namespace fdqpt;

namespace {

ModelParams preset(const char* name) { return find_preset(name)->params; }

// Eigenvalue phases of a 2x2 unitary, sorted.
std::array<double, 2> eigen_phases(const Mat2& u) {
    Eigen::ComplexEigenSolver<Mat2> es(u);
    std::array<double, 2> out{std::arg(es.eigenvalues()(0)), std::arg(es.eigenvalues()(1))};
    std::sort(out.begin(), out.end());
    return out;
}

// Same spectrum on the unit circle, order-independent.
bool same_spectrum(const Mat2& a, const Mat2& b, double tol) {
    const auto pa = eigen_phases(a);
    const auto pb = eigen_phases(b);
    const bool direct = oracle::angle_distance(pa[0], pb[0]) < tol &&
                        oracle::angle_distance(pa[1], pb[1]) < tol;
    const bool swapped = oracle::angle_distance(pa[0], pb[1]) < tol &&
                         oracle::angle_distance(pa[1], pb[0]) < tol;
    return direct || swapped;
}

// Angle accumulation of (h_z - w/2, sign * h_xy) on a dense grid, unrounded.
double dense_chiral_winding(const ModelParams& p, double sign, int points) {
    double total = 0.0;
    const auto angle = [&](double k) {
        return std::atan2(sign * oracle::hxy(p, k), oracle::hz(p, k) - p.omega_drive / 2);
    };
    double prev = angle(-kPi);
    for (int j = 1; j < points; ++j) {
        const double cur = angle(-kPi + kTwoPi * j / (points - 1));
        total += oracle::wrap(cur - prev);
        prev = cur;
    }
    return total / kTwoPi;
}

// Draw with the planar vector bounded away from the origin.
ModelParams gapped_params(oracle::Gen& gen) {
    for (;;) {
        const ModelParams p = gen.params();
        if (std::abs(p.omega_amp) < 0.05) continue;
        if (std::abs(std::abs(p.omega_drive - p.delta2) - std::abs(p.delta1)) < 0.05) continue;
        return p;
    }
}

}  // namespace

TEST_SUITE("topology") {

TEST_CASE("symmetric frame operators at k = 0 coincide") {
    oracle::Gen gen(51);
    for (int i = 0; i < 20; ++i) {
        const auto ops = symmetric_frame_operators(gen.params(), 0.0);
        CHECK(oracle::max_abs(ops.u1 - ops.u2) == 0.0);
    }
}

TEST_CASE("symmetric frame operators: closed form, chirality and unitarity") {
    oracle::Gen gen(52);
    for (int i = 0; i < 100; ++i) {
        const ModelParams p = gen.params();
        const double k = gen.uniform(-kPi, kPi);
        const double period = p.period();
        const auto ops = symmetric_frame_operators(p, k);
        const Mat2 gen1 = (oracle::hz(p, k) - p.omega_drive / 2) * oracle::sz() +
                          oracle::hxy(p, k) * oracle::sx();
        const Mat2 gen2 = (oracle::hz(p, k) - p.omega_drive / 2) * oracle::sz() -
                          oracle::hxy(p, k) * oracle::sx();
        const Mat2 ref1 = -(Complex(0, -period) * gen1).exp();
        const Mat2 ref2 = -(Complex(0, -period) * gen2).exp();
        CHECK(oracle::max_abs(ops.u1 - ref1) < 1e-12);
        CHECK(oracle::max_abs(ops.u2 - ref2) < 1e-12);
        for (const Mat2* u : {&ops.u1, &ops.u2}) {
            CHECK(oracle::max_abs(oracle::sy() * *u * oracle::sy() - u->adjoint()) < 1e-12);
            CHECK(oracle::max_abs(u->adjoint() * *u - Mat2::Identity()) < 1e-12);
        }
    }
}

TEST_CASE("property: frame equivalence of the one-period operators") {
    oracle::Gen gen(53);
    int checked = 0;
    while (checked < 100) {
        const ModelParams p = gen.params();
        const double k = gen.uniform(0, kPi);
        Mat2 u;
        try {
            u = propagator_analytic(p, k, p.period());
        } catch (const GaplessPoint&) {
            continue;
        }
        const auto ops = symmetric_frame_operators(p, k);
        CHECK(same_spectrum(ops.u1, u, 1e-10));
        CHECK(same_spectrum(ops.u2, u, 1e-10));
        ++checked;
    }
}

TEST_CASE("invariants of the three reference parameter sets") {
    const ChiralInvariants one = chiral_winding_numbers(preset("example1"));
    CHECK(one.w0 == 0);
    CHECK(one.wpi == 1);
    CHECK(one.w1 == 1);
    CHECK(one.w2 == -1);

    const ModelParams p2 = preset("example2");
    const ChiralInvariants two = chiral_winding_numbers(p2);
    CHECK(two.w0 == 0);
    CHECK(two.wpi == 0);
    CHECK(std::abs(dense_chiral_winding(p2, 1.0, 100000)) < 1e-9);

    const ModelParams p3 = preset("example3");
    const ChiralInvariants three = chiral_winding_numbers(p3);
    CHECK(three.w0 == 0);
    CHECK(std::abs(three.wpi) == 1);
    CHECK(std::abs(three.w1_raw - dense_chiral_winding(p3, 1.0, 100000)) < 1e-9);
    CHECK(std::abs(one.w1_raw - dense_chiral_winding(preset("example1"), 1.0, 100000)) < 1e-9);
}

TEST_CASE("accumulated winding matches the winding integral") {
    oracle::Gen gen(54);
    for (int i = 0; i < 30; ++i) {
        const ModelParams p = gapped_params(gen);
        const ChiralInvariants inv = chiral_winding_numbers(p);
        CHECK(std::abs(inv.w1_raw - oracle::integral_winding(p, 1.0, 10000)) < 1e-3);
        CHECK(std::abs(inv.w2_raw - oracle::integral_winding(p, -1.0, 10000)) < 1e-3);
    }
}

TEST_CASE("gap closure is reported") {
    ModelParams p = preset("example1");
    p.delta2 = p.omega_drive - p.delta1;  // h_z(0) = w/2 and h_xy(0) = 0
    CHECK_THROWS_AS(chiral_winding_numbers(p), GapClosure);
    p = preset("example1");
    p.omega_amp = 0.0;
    p.delta2 = p.omega_drive;  // h_xy = 0 and h_z = w/2 at the grid point k = pi/2
    CHECK_THROWS_AS(chiral_winding_numbers(p), GapClosure);
}

TEST_CASE("encircling condition examples") {
    CHECK(encircling_condition(preset("example1")));
    CHECK_FALSE(encircling_condition(preset("example2")));
    CHECK(encircling_condition(preset("example3")));
    oracle::Gen gen(55);
    for (int i = 0; i < 20; ++i) {
        ModelParams p = gen.params();
        p.delta2 = p.omega_drive;
        if (p.delta1 == 0.0) continue;
        CHECK(encircling_condition(p));
    }
}

TEST_CASE("property: encircling condition equals the strict inequality") {
    oracle::Gen gen(56);
    for (int i = 0; i < 200; ++i) {
        const ModelParams p = gen.params();
        const double lhs = std::abs(p.omega_drive - p.delta2);
        if (lhs == std::abs(p.delta1)) continue;
        CHECK(encircling_condition(p) == (lhs < std::abs(p.delta1)));
    }
}

TEST_CASE("property: W2 = -W1 and the pi invariant tracks encircling") {
    oracle::Gen gen(57);
    int nontrivial = 0;
    for (int i = 0; i < 200; ++i) {
        const ModelParams p = gapped_params(gen);
        const ChiralInvariants inv = chiral_winding_numbers(p);
        CHECK(inv.w2 == -inv.w1);
        CHECK(inv.w0 == 0);
        CHECK(std::abs(inv.wpi) <= 1);
        CHECK((inv.wpi != 0) == encircling_condition(p));
        nontrivial += inv.wpi != 0;
    }
    CHECK(nontrivial > 20);
    CHECK(nontrivial < 180);
}

}  // TEST_SUITE
