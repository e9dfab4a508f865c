#pragma once

// Harmonically driven two-level Bloch Hamiltonian
//
//   H(k,t) = h_xy(k) [cos(wt) sx + sin(wt) sy] + h_z(k) sz,
//   h_xy = Omega sin(k) / 2,  h_z = (delta1 cos k + delta2) / 2,
//
// and its exact solution in the frame rotating with U_R(t) = diag(1, e^{iwt}).

#include <Eigen/Dense>
#include <complex>

namespace fdqpt {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Relative gap below which band labels are considered meaningless.
inline constexpr double kGapFloor = 1e-9;

enum class Band { minus, plus };

const char* to_string(Band band);

/// Drive and coupling parameters, all angular frequencies (rad / time unit).
struct ModelParams {
    double omega_drive = kPi;  ///< w, must be > 0
    double delta1 = kPi;
    double delta2 = kPi / 2;
    double omega_amp = 1.0;  ///< Omega

    double period() const { return kTwoPi / omega_drive; }
    /// Largest parameter magnitude; sets the absolute scale of all floors.
    double scale() const;
    /// Throws InvalidParams unless every field is finite and omega_drive > 0.
    void validate() const;

    bool operator==(const ModelParams&) const = default;
};

struct BlochComponents {
    double h_xy = 0.0;
    double h_z = 0.0;
};

struct FloquetSolution {
    double e_minus = 0.0;  ///< unfolded quasienergy w/2 - gap/2
    double e_plus = 0.0;   ///< unfolded quasienergy w/2 + gap/2
    Vec2 chi_minus;
    Vec2 chi_plus;
    double gap = 0.0;

    double energy(Band band) const { return band == Band::plus ? e_plus : e_minus; }
    const Vec2& mode(Band band) const { return band == Band::plus ? chi_plus : chi_minus; }
};

namespace pauli {
Mat2 identity();
Mat2 x();
Mat2 y();
Mat2 z();
}  // namespace pauli

/// sin(k) that is exactly zero at k in {0, +-pi}.
double sin_k(double k);

BlochComponents bloch_components(const ModelParams& params, double k);

/// Lab-frame H(k,t).
Mat2 hamiltonian_lab(const ModelParams& params, double k, double t);

/// Static rotating-frame Hamiltonian H_F(k) = h_xy sx + (h_z - w/2) sz + w/2.
Mat2 hamiltonian_rotating(const ModelParams& params, double k);

/// U_R^dagger H U_R, the time-independent part of H_F without the frame term.
Mat2 hamiltonian_rotated(const ModelParams& params, double k);

/// Quasienergies and Floquet modes at t = 0; throws GaplessPoint when the gap closes.
FloquetSolution floquet_solution(const ModelParams& params, double k);

/// U_R(t) = diag(1, e^{iwt}).
Mat2 micromotion(const ModelParams& params, double t);
/// Analytic dU_R/dt.
Mat2 micromotion_derivative(const ModelParams& params, double t);

/// Display-only reduction of a quasienergy to [-w/2, w/2).
double fold_quasienergy(double energy, double omega_drive);

}  // namespace fdqpt
