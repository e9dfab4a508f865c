#include "fdqpt/lattice.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fdqpt/errors.hpp"
#include "fdqpt/integrator.hpp"

namespace fdqpt {

namespace {

const Complex I(0.0, 1.0);

using Triplets = std::vector<Eigen::Triplet<Complex>>;

struct Bond {
    int from;
    int to;
    double sign;  // -1 on the wrap-around bond of the antiperiodic chain
};

std::vector<Bond> chain_bonds(int n_sites, Boundary boundary) {
    std::vector<Bond> bonds;
    for (int n = 0; n + 1 < n_sites; ++n) bonds.push_back({n, n + 1, 1.0});
    if (boundary == Boundary::antiperiodic) bonds.push_back({n_sites - 1, 0, -1.0});
    return bonds;
}

}  // namespace

const char* to_string(Boundary boundary) {
    return boundary == Boundary::open ? "open" : "antiperiodic";
}

BdgChain::BdgChain(const ModelParams& params, int n_sites, Boundary boundary)
    : params_(params), n_sites_(n_sites), boundary_(boundary) {
    params_.validate();
    if (n_sites < 2) {
        std::ostringstream msg;
        msg << "chain needs at least two sites, got " << n_sites;
        throw InvalidSize(msg.str());
    }
    const int n = n_sites;
    Triplets stat;
    Triplets pair;
    for (int j = 0; j < n; ++j) {
        stat.emplace_back(j, j, 0.5 * params.delta2);
        stat.emplace_back(n + j, n + j, -0.5 * params.delta2);
    }
    // Upper-right pairing block of M is (1/2) p(t) A with p(t) = (Omega / 2i) e^{-iwt}
    // and A antisymmetric; the lower-left block is its adjoint.
    const Complex pair_amp = 0.5 * params.omega_amp / (2.0 * I);
    for (const Bond& b : chain_bonds(n, boundary)) {
        const double hop = 0.5 * b.sign * params.delta1 / 2.0;
        stat.emplace_back(b.from, b.to, hop);
        stat.emplace_back(b.to, b.from, hop);
        stat.emplace_back(n + b.from, n + b.to, -hop);
        stat.emplace_back(n + b.to, n + b.from, -hop);
        pair.emplace_back(b.from, n + b.to, b.sign * pair_amp);
        pair.emplace_back(b.to, n + b.from, -b.sign * pair_amp);
    }
    // Adjoint of the pairing part: the lower-left block.
    Triplets pair_adj;
    for (const auto& e : pair) pair_adj.emplace_back(e.col(), e.row(), std::conj(e.value()));

    // Pad every part with explicit zeros on the union pattern.
    const auto padded = [&](const Triplets& part) {
        Triplets all = part;
        for (const Triplets* other : {&stat, &pair, &pair_adj}) {
            for (const auto& e : *other) all.emplace_back(e.row(), e.col(), Complex(0.0));
        }
        Sparse m(dim(), dim());
        m.setFromTriplets(all.begin(), all.end());
        return m;
    };
    static_ = padded(stat);
    pairing_ = padded(pair);
    pairing_adjoint_ = padded(pair_adj);
}

BdgChain::Sparse BdgChain::assemble(double t) const {
    const Complex phase = std::exp(-I * (params_.omega_drive * t));
    const Complex phase_conj = std::conj(phase);
    Sparse m = static_;
    Complex* values = m.valuePtr();
    const Complex* pair = pairing_.valuePtr();
    const Complex* pair_adj = pairing_adjoint_.valuePtr();
    for (Eigen::Index j = 0; j < m.nonZeros(); ++j) {
        values[j] += phase * pair[j] + phase_conj * pair_adj[j];
    }
    return m;
}

Eigen::MatrixXcd BdgChain::hamiltonian_at(double t) const {
    return Eigen::MatrixXcd(assemble(t));
}

Eigen::MatrixXcd BdgChain::apply(double t, const Eigen::MatrixXcd& u) const {
    Eigen::MatrixXcd out(u.rows(), u.cols());
    out.noalias() = assemble(t) * u;
    return out;
}

BdgChain build_chain(const ModelParams& params, int n_sites, Boundary boundary) {
    return BdgChain(params, n_sites, boundary);
}

std::vector<double> antiperiodic_momenta(int n_sites) {
    std::vector<double> ks;
    ks.reserve(static_cast<std::size_t>(n_sites));
    for (int m = 0; m < n_sites; ++m) {
        double k = kTwoPi * (m + 0.5) / n_sites;
        if (k > kPi) k -= kTwoPi;
        ks.push_back(k);
    }
    return ks;
}

double momentum_consistency_check(const BdgChain& chain, std::vector<double> times) {
    if (chain.boundary() != Boundary::antiperiodic) {
        throw BoundaryMismatch("momentum check requires the antiperiodic chain");
    }
    const int n = chain.n_sites();
    if (n < 8 || n % 2 != 0) {
        std::ostringstream msg;
        msg << "momentum check needs an even chain of at least 8 sites, got " << n;
        throw InvalidSize(msg.str());
    }
    const ModelParams& params = chain.params();
    if (times.empty()) {
        const double period = params.period();
        times = {0.0, period / 3.0, period / 2.0};
    }

    const std::vector<double> ks = antiperiodic_momenta(n);
    // f_j = sum_m F(j, m) f_{k_m}, and f_j^dag = sum_m F(j, m) f_{-k_m}^dag.
    Eigen::MatrixXcd fourier = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (int j = 0; j < n; ++j) {
        for (int m = 0; m < n; ++m) {
            const Complex e = norm * std::exp(I * (ks[static_cast<std::size_t>(m)] * (j + 1)));
            fourier(j, m) = e;
            fourier(n + j, n + m) = e;
        }
    }

    double worst = 0.0;
    for (double t : times) {
        const Eigen::MatrixXcd transformed =
            fourier.adjoint() * chain.hamiltonian_at(t) * fourier;
        Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
        for (int m = 0; m < n; ++m) {
            const Mat2 block = hamiltonian_lab(params, ks[static_cast<std::size_t>(m)], t);
            expected(m, m) = block(0, 0);
            expected(m, n + m) = block(0, 1);
            expected(n + m, m) = block(1, 0);
            expected(n + m, n + m) = block(1, 1);
        }
        worst = std::max(worst, (transformed - expected).cwiseAbs().maxCoeff());
    }
    return worst;
}

double momentum_consistency_check(const ModelParams& params, int n_sites) {
    return momentum_consistency_check(build_chain(params, n_sites, Boundary::antiperiodic));
}

int FloquetSpectrum::pi_mode_count() const {
    return static_cast<int>(
        std::count_if(modes.begin(), modes.end(), [](const QuasiMode& m) { return m.pi_mode; }));
}

double FloquetSpectrum::pi_mode_pinning(double omega_drive) const {
    double best = std::numeric_limits<double>::infinity();
    for (const QuasiMode& m : modes) {
        if (m.pi_mode) best = std::min(best, omega_drive / 2.0 - std::abs(m.quasienergy));
    }
    return best;
}

double edge_weight(const Eigen::VectorXcd& nambu_vector, int n_sites) {
    const int outer = static_cast<int>(std::ceil(0.05 * n_sites));
    double edge = 0.0;
    double total = 0.0;
    for (int j = 0; j < n_sites; ++j) {
        const double w = std::norm(nambu_vector(j)) + std::norm(nambu_vector(n_sites + j));
        total += w;
        if (j < outer || j >= n_sites - outer) edge += w;
    }
    return total > 0.0 ? edge / total : 0.0;
}

FloquetSpectrum chain_floquet_spectrum(const BdgChain& chain, int steps) {
    if (steps < kMinChainSteps) {
        std::ostringstream msg;
        msg << "chain propagation needs at least " << kMinChainSteps << " steps, got " << steps;
        throw StepCountTooSmall(msg.str());
    }
    const ModelParams& params = chain.params();
    const double period = params.period();
    const auto apply_h = [&chain](double t, const Eigen::MatrixXcd& u) {
        return chain.apply(t, u);
    };
    Eigen::MatrixXcd u = rk4_propagate<Eigen::MatrixXcd>(apply_h, chain.dim(), period, steps);

    FloquetSpectrum out;
    out.correction_norm = reunitarize(u);

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(u);
    const double w = params.omega_drive;
    for (Eigen::Index j = 0; j < u.rows(); ++j) {
        QuasiMode mode;
        // Eigenvalue e^{-i eps T}.
        mode.quasienergy = fold_quasienergy(-std::arg(solver.eigenvalues()(j)) / period, w);
        mode.vector = solver.eigenvectors().col(j).normalized();
        mode.edge_weight = edge_weight(mode.vector, chain.n_sites());
        mode.pi_mode = (w / 2.0 - std::abs(mode.quasienergy)) < kPiModeWindow * w &&
                       mode.edge_weight >= kPiModeEdgeWeight;
        out.modes.push_back(std::move(mode));
    }
    std::stable_sort(out.modes.begin(), out.modes.end(),
                     [](const QuasiMode& a, const QuasiMode& b) {
                         return a.quasienergy < b.quasienergy;
                     });
    return out;
}

FloquetSpectrum obc_floquet_spectrum(const ModelParams& params, int n_sites, int steps) {
    return chain_floquet_spectrum(build_chain(params, n_sites, Boundary::open), steps);
}

}  // namespace fdqpt
