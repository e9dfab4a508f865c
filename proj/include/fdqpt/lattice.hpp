#pragma once

// Real-space fermionic chain in Nambu form (f_1..f_N, f_1^dagger..f_N^dagger):
//
//   H(t) = (delta1/2) sum (f_n^dag f_{n+1} + h.c.) + delta2 sum f_n^dag f_n
//        + (Omega/2i) sum (e^{-iwt} f_n^dag f_{n+1}^dag - h.c.)
//        = Psi^dag M(t) Psi + const,
//
// with M = (1/2) [[h, Delta], [Delta^dag, -h^T]]. The momentum blocks of M are exactly
// the two-level H(k,t), so its single-particle propagator reproduces the qubit dynamics.

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <vector>

#include "fdqpt/model.hpp"

namespace fdqpt {

enum class Boundary { open, antiperiodic };

const char* to_string(Boundary boundary);

inline constexpr int kMinChainSteps = 1024;
inline constexpr int kDefaultChainSteps = 2048;
inline constexpr int kDefaultEdgeSites = 40;
/// pi-mode criterion: distance to +-w/2 below this fraction of w ...
inline constexpr double kPiModeWindow = 0.02;
/// ... and at least this much weight on the outer 10% of sites.
inline constexpr double kPiModeEdgeWeight = 0.5;

class BdgChain {
public:
    using Sparse = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

    BdgChain(const ModelParams& params, int n_sites, Boundary boundary);

    int n_sites() const { return n_sites_; }
    Eigen::Index dim() const { return 2 * n_sites_; }
    Boundary boundary() const { return boundary_; }
    const ModelParams& params() const { return params_; }

    /// Dense 2N x 2N matrix M(t).
    Eigen::MatrixXcd hamiltonian_at(double t) const;
    /// M(t) * u without forming M(t).
    Eigen::MatrixXcd apply(double t, const Eigen::MatrixXcd& u) const;

private:
    ModelParams params_;
    int n_sites_;
    Boundary boundary_;
    // M(t) = static_ + e^{-iwt} pairing_ + e^{+iwt} pairing_^dagger, all three stored
    // on one sparsity pattern so M(t) is assembled by a pass over the value arrays.
    Sparse static_;
    Sparse pairing_;
    Sparse pairing_adjoint_;

    Sparse assemble(double t) const;
};

/// Throws InvalidSize for n_sites < 2.
BdgChain build_chain(const ModelParams& params, int n_sites, Boundary boundary);

/// Largest deviation between the Fourier-transformed antiperiodic chain and the
/// block-diagonal assembly of hamiltonian_lab(k_m, t), k_m = 2 pi (m + 1/2) / N,
/// over the sampled times (0, T/3, T/2 when empty).
double momentum_consistency_check(const BdgChain& chain, std::vector<double> times = {});
double momentum_consistency_check(const ModelParams& params, int n_sites);

/// Antiperiodic momenta 2 pi (m + 1/2) / N reduced to (-pi, pi].
std::vector<double> antiperiodic_momenta(int n_sites);

struct QuasiMode {
    double quasienergy = 0.0;  ///< folded to [-w/2, w/2)
    double edge_weight = 0.0;  ///< weight on ceil(N/20) sites at each end
    bool pi_mode = false;
    Eigen::VectorXcd vector;
};

struct FloquetSpectrum {
    std::vector<QuasiMode> modes;  ///< ascending quasienergy
    double correction_norm = 0.0;

    int pi_mode_count() const;
    /// pi modes come in particle-hole partners; reported as pairs.
    int pi_pair_count() const { return pi_mode_count() / 2; }
    /// Smallest distance of any pi mode to +-w/2 (infinity when there is none).
    double pi_mode_pinning(double omega_drive) const;
};

/// Fraction of |vector|^2 on the outer ceil(N/20) sites at each end.
double edge_weight(const Eigen::VectorXcd& nambu_vector, int n_sites);

/// One-period propagator of `chain` by RK4 (`steps` per period), then its quasienergies.
FloquetSpectrum chain_floquet_spectrum(const BdgChain& chain, int steps = kDefaultChainSteps);

/// Open-boundary spectrum with pi edge modes flagged.
FloquetSpectrum obc_floquet_spectrum(const ModelParams& params, int n_sites = kDefaultEdgeSites,
                                     int steps = kDefaultChainSteps);

}  // namespace fdqpt
