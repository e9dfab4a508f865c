#pragma once

#include "fdqpt/model.hpp"

namespace fdqpt {

/// Minimum substeps per drive period accepted by the brute-force propagator.
inline constexpr int kMinOracleSteps = 256;
inline constexpr int kDefaultOracleSteps = 4096;

struct ReturnAmplitude {
    Complex value;
    Band band = Band::minus;
    double k = 0.0;
    double t = 0.0;
};

struct OracleResult {
    Mat2 propagator;
    double correction_norm = 0.0;  ///< max-norm of the final re-unitarization
    long substeps = 0;
};

/// Exact U(k,t) = U_R(t) exp(-i H_F(k) t) from the spectral decomposition of H_F.
Mat2 propagator_analytic(const ModelParams& params, double k, double t);

/// Time-ordered product by RK4 with `steps_per_period` uniform substeps per period.
OracleResult propagator_oracle(const ModelParams& params, double k, double t,
                               int steps_per_period = kDefaultOracleSteps);

/// |psi_band(k,t)> = e^{-iEt} U_R(t) chi_band.
Vec2 evolved_state(const ModelParams& params, Band band, double k, double t);

ReturnAmplitude return_amplitude(const ModelParams& params, Band band, double k, double t);

double return_probability(const ModelParams& params, Band band, double k, double t);

}  // namespace fdqpt
