#pragma once

// Fixed-step classical Runge-Kutta propagation of i dU/dt = H(t) U, U(0) = I.
// Shared by the two-level oracle and the real-space chain.

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <complex>

namespace fdqpt {

/// `apply_h(t, U)` must return H(t) * U. Uniform step t_end / n_steps.
template <typename Matrix, typename ApplyH>
Matrix rk4_propagate(ApplyH&& apply_h, Eigen::Index dim, double t_end, long n_steps) {
    const std::complex<double> minus_i(0.0, -1.0);
    Matrix u = Matrix::Identity(dim, dim);
    if (n_steps <= 0 || t_end == 0.0) return u;
    const double dt = t_end / static_cast<double>(n_steps);
    for (long step = 0; step < n_steps; ++step) {
        const double t = dt * static_cast<double>(step);
        const Matrix k1 = minus_i * apply_h(t, u);
        const Matrix k2 = minus_i * apply_h(t + 0.5 * dt, Matrix(u + (0.5 * dt) * k1));
        const Matrix k3 = minus_i * apply_h(t + 0.5 * dt, Matrix(u + (0.5 * dt) * k2));
        const Matrix k4 = minus_i * apply_h(t + dt, Matrix(u + dt * k3));
        u += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return u;
}

/// Replaces `u` by the nearest unitary (polar factor) and returns the max-norm of the change.
template <typename Matrix>
double reunitarize(Matrix& u) {
    Eigen::BDCSVD<Matrix> svd(u, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Matrix polar = svd.matrixU() * svd.matrixV().adjoint();
    const double correction = (polar - u).cwiseAbs().maxCoeff();
    u = polar;
    return correction;
}

}  // namespace fdqpt
