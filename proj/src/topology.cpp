#include "fdqpt/topology.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "fdqpt/errors.hpp"
#include "fdqpt/geometry.hpp"
#include "fdqpt/grid.hpp"

namespace fdqpt {

namespace {

// -exp(-i (a sz + b sx) T) in closed form.
Mat2 minus_exp_planar(double a, double b, double period) {
    const double r = std::hypot(a, b);
    const Complex minus_i(0.0, -1.0);
    const Mat2 generator = a * pauli::z() + b * pauli::x();
    Mat2 u = std::cos(r * period) * pauli::identity();
    if (r > 0.0) u += minus_i * (std::sin(r * period) / r) * generator;
    return -u;
}

double accumulated_winding(const std::vector<double>& xs, const std::vector<double>& ys) {
    double total = 0.0;
    double prev = std::atan2(ys.front(), xs.front());
    for (std::size_t j = 1; j < xs.size(); ++j) {
        const double angle = std::atan2(ys[j], xs[j]);
        total += wrap_phase(angle - prev);
        prev = angle;
    }
    return total / kTwoPi;
}

}  // namespace

SymmetricFrameOperators symmetric_frame_operators(const ModelParams& params, double k) {
    params.validate();
    const auto [h_xy, h_z] = bloch_components(params, k);
    const double d = h_z - params.omega_drive / 2.0;
    const double period = params.period();
    return {minus_exp_planar(d, h_xy, period), minus_exp_planar(d, -h_xy, period)};
}

ChiralInvariants chiral_winding_numbers(const ModelParams& params, int k_points) {
    params.validate();
    if (k_points < 3) throw InvalidSize("chiral winding needs at least three k-points");
    const std::vector<double> ks = uniform_grid(-kPi, kPi, k_points);
    const double floor = kWindingFloor * params.scale();

    std::vector<double> xs(ks.size());
    std::vector<double> ys(ks.size());
    for (std::size_t j = 0; j < ks.size(); ++j) {
        const auto [h_xy, h_z] = bloch_components(params, ks[j]);
        xs[j] = h_z - params.omega_drive / 2.0;
        ys[j] = h_xy;
        if (std::hypot(xs[j], ys[j]) < floor) {
            std::ostringstream msg;
            msg << "effective Hamiltonian gap closes at k = " << ks[j];
            throw GapClosure(msg.str());
        }
    }

    ChiralInvariants out;
    out.w1_raw = accumulated_winding(xs, ys);
    for (double& y : ys) y = -y;
    out.w2_raw = accumulated_winding(xs, ys);
    out.w1 = static_cast<int>(std::lround(out.w1_raw));
    out.w2 = static_cast<int>(std::lround(out.w2_raw));
    out.w0 = (out.w1 + out.w2) / 2;
    out.wpi = (out.w1 - out.w2) / 2;
    return out;
}

bool encircling_condition(const ModelParams& params) {
    const double detuning = params.omega_drive - params.delta2;
    return (detuning - params.delta1) * (detuning + params.delta1) < 0.0;
}

}  // namespace fdqpt
