#include "fdqpt/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fdqpt/errors.hpp"

namespace fdqpt {

namespace {

const Complex I(0.0, 1.0);

// First nonzero component real and positive.
Vec2 canonical_phase(Vec2 v) {
    const Complex lead = v(0) != Complex(0.0) ? v(0) : v(1);
    return v * (std::abs(lead) / lead);
}

}  // namespace

const char* to_string(Band band) { return band == Band::plus ? "plus" : "minus"; }

double ModelParams::scale() const {
    return std::max({std::abs(omega_amp), std::abs(delta1), std::abs(delta2), omega_drive});
}

void ModelParams::validate() const {
    if (!std::isfinite(omega_drive) || !std::isfinite(delta1) || !std::isfinite(delta2) ||
        !std::isfinite(omega_amp)) {
        throw InvalidParams("model parameters must be finite");
    }
    if (!(omega_drive > 0.0)) {
        std::ostringstream msg;
        msg << "omega_drive must be positive, got " << omega_drive;
        throw InvalidParams(msg.str());
    }
}

namespace pauli {
Mat2 identity() { return Mat2::Identity(); }
Mat2 x() {
    Mat2 m;
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}
Mat2 y() {
    Mat2 m;
    m << 0.0, -I, I, 0.0;
    return m;
}
Mat2 z() {
    Mat2 m;
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}
}  // namespace pauli

double sin_k(double k) {
    if (k == 0.0 || std::abs(k) == kPi) return 0.0;
    return std::sin(k);
}

BlochComponents bloch_components(const ModelParams& params, double k) {
    return {params.omega_amp * sin_k(k) / 2.0, (params.delta1 * std::cos(k) + params.delta2) / 2.0};
}

Mat2 hamiltonian_lab(const ModelParams& params, double k, double t) {
    const auto [h_xy, h_z] = bloch_components(params, k);
    const double phase = params.omega_drive * t;
    // h_xy [cos sx + sin sy] has e^{-i wt} in the upper-right corner.
    const Complex off = h_xy * std::exp(-I * phase);
    Mat2 h;
    h << h_z, off, std::conj(off), -h_z;
    return h;
}

Mat2 hamiltonian_rotating(const ModelParams& params, double k) {
    const auto [h_xy, h_z] = bloch_components(params, k);
    const double w2 = params.omega_drive / 2.0;
    return h_xy * pauli::x() + (h_z - w2) * pauli::z() + w2 * pauli::identity();
}

Mat2 hamiltonian_rotated(const ModelParams& params, double k) {
    const auto [h_xy, h_z] = bloch_components(params, k);
    return h_xy * pauli::x() + h_z * pauli::z();
}

FloquetSolution floquet_solution(const ModelParams& params, double k) {
    params.validate();
    const auto [h_xy, h_z] = bloch_components(params, k);
    const double w2 = params.omega_drive / 2.0;
    const double d = h_z - w2;
    const double r = std::hypot(h_xy, d);
    if (2.0 * r <= kGapFloor * params.scale()) {
        std::ostringstream msg;
        msg << "Floquet gap closes at k = " << k << " (gap " << 2.0 * r << ")";
        throw GaplessPoint(msg.str());
    }

    // Half-angle of the Bloch inclination, cos(theta) = d / r, evaluated without cancellation.
    double cos_half = 0.0;
    double sin_half = 0.0;
    if (d >= 0.0) {
        cos_half = std::sqrt((r + d) / (2.0 * r));
        sin_half = std::abs(h_xy) / std::sqrt(2.0 * r * (r + d));
    } else {
        sin_half = std::sqrt((r - d) / (2.0 * r));
        cos_half = std::abs(h_xy) / std::sqrt(2.0 * r * (r - d));
    }
    const double sgn = h_xy < 0.0 ? -1.0 : 1.0;

    FloquetSolution sol;
    sol.gap = 2.0 * r;
    sol.e_plus = w2 + r;
    sol.e_minus = w2 - r;
    sol.chi_plus = canonical_phase(Vec2(cos_half, sgn * sin_half));
    sol.chi_minus = canonical_phase(Vec2(sgn * sin_half, -cos_half));
    return sol;
}

Mat2 micromotion(const ModelParams& params, double t) {
    Mat2 u = Mat2::Zero();
    u(0, 0) = 1.0;
    u(1, 1) = std::exp(I * (params.omega_drive * t));
    return u;
}

Mat2 micromotion_derivative(const ModelParams& params, double t) {
    Mat2 du = Mat2::Zero();
    du(1, 1) = I * params.omega_drive * std::exp(I * (params.omega_drive * t));
    return du;
}

double fold_quasienergy(double energy, double omega_drive) {
    const double half = omega_drive / 2.0;
    double folded = std::fmod(energy + half, omega_drive);
    if (folded < 0.0) folded += omega_drive;
    folded -= half;
    if (folded >= half) folded -= omega_drive;
    return folded;
}

}  // namespace fdqpt
