#include "fdqpt/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "fdqpt/errors.hpp"
#include "fdqpt/integrator.hpp"

namespace fdqpt {

namespace {

const Complex I(0.0, 1.0);

// <chi| U_R(t) |chi> = |a|^2 + e^{iwt} |b|^2
Complex micromotion_overlap(const ModelParams& params, const Vec2& chi, double t) {
    return std::norm(chi(0)) + std::exp(I * (params.omega_drive * t)) * std::norm(chi(1));
}

}  // namespace

Mat2 propagator_analytic(const ModelParams& params, double k, double t) {
    const FloquetSolution sol = floquet_solution(params, k);
    if (t == 0.0) return Mat2::Identity();
    const Mat2 static_part =
        std::exp(-I * (sol.e_plus * t)) * (sol.chi_plus * sol.chi_plus.adjoint()) +
        std::exp(-I * (sol.e_minus * t)) * (sol.chi_minus * sol.chi_minus.adjoint());
    return micromotion(params, t) * static_part;
}

OracleResult propagator_oracle(const ModelParams& params, double k, double t,
                               int steps_per_period) {
    params.validate();
    if (steps_per_period < kMinOracleSteps) {
        std::ostringstream msg;
        msg << "oracle needs at least " << kMinOracleSteps << " steps per period, got "
            << steps_per_period;
        throw StepCountTooSmall(msg.str());
    }
    OracleResult out;
    if (t <= 0.0) {
        out.propagator = Mat2::Identity();
        return out;
    }
    out.substeps = std::max(
        1L, static_cast<long>(std::ceil(steps_per_period * t / params.period() - 1e-9)));
    const auto apply_h = [&](double s, const Mat2& u) -> Mat2 {
        return hamiltonian_lab(params, k, s) * u;
    };
    out.propagator = rk4_propagate<Mat2>(apply_h, 2, t, out.substeps);
    out.correction_norm = reunitarize(out.propagator);
    return out;
}

Vec2 evolved_state(const ModelParams& params, Band band, double k, double t) {
    const FloquetSolution sol = floquet_solution(params, k);
    return std::exp(-I * (sol.energy(band) * t)) * (micromotion(params, t) * sol.mode(band));
}

ReturnAmplitude return_amplitude(const ModelParams& params, Band band, double k, double t) {
    const FloquetSolution sol = floquet_solution(params, k);
    const Complex value =
        std::exp(-I * (sol.energy(band) * t)) * micromotion_overlap(params, sol.mode(band), t);
    return {value, band, k, t};
}

double return_probability(const ModelParams& params, Band band, double k, double t) {
    const FloquetSolution sol = floquet_solution(params, k);
    return std::norm(micromotion_overlap(params, sol.mode(band), t));
}

}  // namespace fdqpt
