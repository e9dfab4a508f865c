#include "fdqpt/grid.hpp"

#include <stdexcept>

#include "fdqpt/model.hpp"

namespace fdqpt {

std::vector<double> uniform_grid(double lo, double hi, int n) {
    if (n < 2) throw std::invalid_argument("uniform_grid needs at least two points");
    std::vector<double> out(static_cast<std::size_t>(n));
    const double span = hi - lo;
    for (int j = 0; j < n; ++j) {
        out[static_cast<std::size_t>(j)] = lo + span * j / (n - 1);
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

std::vector<double> KTGrid::k_values() const { return uniform_grid(0.0, kPi, k_points); }

std::vector<double> KTGrid::t_values() const { return uniform_grid(0.0, t_max, t_points); }

}  // namespace fdqpt
