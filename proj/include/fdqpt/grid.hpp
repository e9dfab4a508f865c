#pragma once

#include <vector>

namespace fdqpt {

/// n >= 2 uniform points from `lo` to `hi`; both endpoints are reproduced exactly.
std::vector<double> uniform_grid(double lo, double hi, int n);

/// Rectangular sampling of k in [0, pi] and t in [0, t_max].
struct KTGrid {
    int k_points = 2001;
    double t_max = 6.0;
    int t_points = 601;

    std::vector<double> k_values() const;
    std::vector<double> t_values() const;
};

}  // namespace fdqpt
