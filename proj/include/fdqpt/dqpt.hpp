#pragma once

#include <optional>
#include <vector>

#include "fdqpt/model.hpp"

namespace fdqpt {

/// Lower clamp on |G|^2 before taking the logarithm.
inline constexpr double kProbFloor = 1e-14;
inline constexpr int kDefaultRateKPoints = 2001;

struct CriticalSet {
    bool has_dqpt = false;
    std::optional<double> k_c;
    std::vector<double> critical_times;  ///< (2n-1) T / 2 up to t_max
};

/// Real parts of the Fisher zeros on line n; the imaginary part is k-independent.
struct FisherLine {
    int n = 1;
    std::vector<double> k;
    std::vector<double> tau_of_k;  ///< +-infinity where tau diverges
    double t_imag = 0.0;           ///< (2n-1) T / 2
};

/// |w - delta2| <= |delta1|, the critical momentum and critical times up to `t_max`
/// (three periods when omitted). Throws DegenerateDelta1 for delta1 = 0 and w = delta2.
CriticalSet dqpt_condition(const ModelParams& params, std::optional<double> t_max = std::nullopt);

/// True when the critical-momentum condition holds; never throws for delta1 = 0.
bool satisfies_dqpt_condition(const ModelParams& params);

/// tau(k) = ln[h_xy^2 / (E - h_z)^2] / w. Throws UndefinedTau where it diverges.
double fisher_tau(const ModelParams& params, Band band, double k);

std::vector<FisherLine> fisher_lines(const ModelParams& params, Band band, int k_points,
                                     int n_max);

/// g(t) = -(1/pi) int_0^pi dk ln |G(k,t)|^2, trapezoidal on `k_points` uniform points.
double rate_function(const ModelParams& params, Band band, double t,
                     int k_points = kDefaultRateKPoints);

std::vector<double> rate_function_series(const ModelParams& params, Band band,
                                         const std::vector<double>& times,
                                         int k_points = kDefaultRateKPoints);

}  // namespace fdqpt
