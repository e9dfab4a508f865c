#include "fdqpt/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "fdqpt/dqpt.hpp"
#include "fdqpt/dynamics.hpp"
#include "fdqpt/errors.hpp"
#include "fdqpt/grid.hpp"

namespace fdqpt {

namespace {

const Complex I(0.0, 1.0);

// Flags a step as ambiguous when its wrapped size is within this band of pi.
constexpr double kAmbiguousStep = kPi * (1.0 - 1e-6);
constexpr double kQuantizationTolerance = 0.05;

void require_defined(const ReturnAmplitude& g) {
    if (std::abs(g.value) < kAmpFloor) {
        std::ostringstream msg;
        msg << "phase undefined: |G| = " << std::abs(g.value) << " at k = " << g.k
            << ", t = " << g.t;
        throw PhaseUndefined(msg.str());
    }
}

void check_guard(const ModelParams& params, double t) {
    if (!satisfies_dqpt_condition(params)) return;
    const double period = params.period();
    const double x = t / period - 0.5;
    const double nearest = std::max(0.0, std::round(x));
    if (std::abs(x - nearest) * period < kCriticalGuardPeriods * period) {
        std::ostringstream msg;
        msg << "t = " << t << " lies within T/1000 of the critical time "
            << (nearest + 0.5) * period;
        throw NearCriticalTime(msg.str());
    }
}

}  // namespace

double wrap_phase(double angle) {
    double r = std::remainder(angle, kTwoPi);  // [-pi, pi]
    if (r <= -kPi) r += kTwoPi;
    return r;
}

double total_phase(const ModelParams& params, Band band, double k, double t) {
    const ReturnAmplitude g = return_amplitude(params, band, k, t);
    require_defined(g);
    return wrap_phase(std::arg(g.value));
}

double dynamical_phase(const ModelParams& params, Band band, double k, double t) {
    const FloquetSolution sol = floquet_solution(params, k);
    const Vec2& chi = sol.mode(band);
    const double energy = (chi.adjoint() * hamiltonian_rotated(params, k) * chi)(0).real();
    return -energy * t;
}

double geometric_phase(const ModelParams& params, Band band, double k, double t) {
    return phase_record(params, band, k, t).geometric;
}

PhaseRecord phase_record(const ModelParams& params, Band band, double k, double t) {
    PhaseRecord rec;
    rec.k = k;
    rec.t = t;
    rec.band = band;
    rec.total = total_phase(params, band, k, t);
    rec.dynamical = dynamical_phase(params, band, k, t);
    rec.geometric = wrap_phase(rec.total - rec.dynamical);
    return rec;
}

WindingResult winding_number(const ModelParams& params, Band band, double t, int k_points) {
    if (k_points < kMinWindingKPoints) {
        std::ostringstream msg;
        msg << "winding number needs at least " << kMinWindingKPoints << " k-points, got "
            << k_points;
        throw GridTooCoarse(msg.str());
    }
    params.validate();
    check_guard(params, t);

    const std::vector<double> ks = uniform_grid(0.0, kPi, k_points);
    std::vector<double> phases(ks.size());
#pragma omp parallel for schedule(static)
    for (long j = 0; j < static_cast<long>(ks.size()); ++j) {
        phases[static_cast<std::size_t>(j)] =
            geometric_phase(params, band, ks[static_cast<std::size_t>(j)], t);
    }

    double accumulated = 0.0;
    bool previous_ambiguous = false;
    for (std::size_t j = 1; j < phases.size(); ++j) {
        const double step = wrap_phase(phases[j] - phases[j - 1]);
        const bool ambiguous = std::abs(step) > kAmbiguousStep;
        if (ambiguous && previous_ambiguous) {
            std::ostringstream msg;
            msg << "geometric phase unresolved near k = " << ks[j] << " at t = " << t;
            throw GridTooCoarse(msg.str());
        }
        previous_ambiguous = ambiguous;
        accumulated += step;
    }

    WindingResult out;
    out.raw = accumulated / kTwoPi;
    out.nu = static_cast<int>(std::lround(out.raw));
    if (std::abs(out.raw - out.nu) > kQuantizationTolerance) {
        std::ostringstream msg;
        msg << "winding number not quantized: raw = " << out.raw << " at t = " << t;
        throw GridTooCoarse(msg.str());
    }
    return out;
}

BlochVector bloch_expectations(const ModelParams& params, Band band, double k, double t) {
    const Vec2 psi = evolved_state(params, band, k, t);
    const auto expect = [&](const Mat2& op) { return (psi.adjoint() * op * psi)(0).real(); };
    return {expect(pauli::x()), expect(pauli::y()), expect(pauli::z())};
}

double geometric_phase_from_expectations(const ModelParams& params, double k, double t,
                                         const BlochVector& measured) {
    const auto [h_xy, h_z] = bloch_components(params, k);
    const double detuning = 2.0 * h_z - params.omega_drive;  // delta1 cos k + delta2 - w
    const double radius = std::hypot(detuning, 2.0 * h_xy);
    if (radius == 0.0) throw GaplessPoint("initial-state inclination undefined at a gap closure");

    const double transverse = std::hypot(measured.x, measured.y);
    if (transverse == 0.0) {
        throw PhaseUndefined("azimuth of a pole state is undefined");
    }
    const double length = std::sqrt(measured.x * measured.x + measured.y * measured.y +
                                    measured.z * measured.z);

    const double theta = std::acos(std::clamp(detuning / radius, -1.0, 1.0));
    const double cos_vartheta = std::clamp(measured.z / length, -1.0, 1.0);
    const double azimuth_abs = std::acos(std::clamp(measured.x / transverse, -1.0, 1.0));
    const double azimuth = measured.y >= 0.0 ? azimuth_abs : -azimuth_abs;

    // Lower-band initial state is (sin theta/2, -sgn(h_xy) cos theta/2).
    const double sgn = h_xy < 0.0 ? -1.0 : 1.0;
    const Complex overlap =
        std::sin(theta / 2.0) * std::sqrt((1.0 + cos_vartheta) / 2.0) -
        sgn * std::exp(I * azimuth) * std::cos(theta / 2.0) * std::sqrt((1.0 - cos_vartheta) / 2.0);
    if (std::abs(overlap) < kAmpFloor) {
        throw PhaseUndefined("reconstructed overlap vanishes");
    }

    const double w = params.omega_drive;
    return wrap_phase(std::arg(overlap) + 0.5 * w * measured.z * t - 0.5 * w * t);
}

double geometric_phase_from_tomography(const ModelParams& params, Band band, double k,
                                       double t) {
    if (band != Band::minus) {
        throw BandUnsupported("tomography reconstruction is defined for the lower band only");
    }
    const ReturnAmplitude g = return_amplitude(params, band, k, t);
    require_defined(g);
    return geometric_phase_from_expectations(params, k, t, bloch_expectations(params, band, k, t));
}

}  // namespace fdqpt
