#pragma once

#include "fdqpt/model.hpp"

namespace fdqpt {

/// |G| below which a phase is reported as undefined.
inline constexpr double kAmpFloor = 1e-9;
/// Half-width of the exclusion window around critical times, in periods.
inline constexpr double kCriticalGuardPeriods = 1e-3;
inline constexpr int kMinWindingKPoints = 401;
inline constexpr int kDefaultWindingKPoints = 2001;

/// Reduces an angle to (-pi, pi].
double wrap_phase(double angle);

struct PhaseRecord {
    double total = 0.0;
    double dynamical = 0.0;
    double geometric = 0.0;  ///< (total - dynamical) reduced to (-pi, pi]
    double k = 0.0;
    double t = 0.0;
    Band band = Band::minus;
};

struct WindingResult {
    int nu = 0;
    double raw = 0.0;  ///< accumulated wrapped phase / 2pi before rounding
};

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// arg G, principal branch. Throws PhaseUndefined when |G| < kAmpFloor.
double total_phase(const ModelParams& params, Band band, double k, double t);

/// -<chi| H_R |chi> t with H_R = h_xy sx + h_z sz; exact, linear in t.
double dynamical_phase(const ModelParams& params, Band band, double k, double t);

double geometric_phase(const ModelParams& params, Band band, double k, double t);

PhaseRecord phase_record(const ModelParams& params, Band band, double k, double t);

/// Winding of the geometric phase over k in [0, pi], by summing wrapped adjacent differences.
WindingResult winding_number(const ModelParams& params, Band band, double t,
                             int k_points = kDefaultWindingKPoints);

/// Pauli expectation values in the evolved Floquet state.
BlochVector bloch_expectations(const ModelParams& params, Band band, double k, double t);

/// Rebuilds the lower-band geometric phase from measured Pauli expectation values, the
/// way a tomography experiment would: Bloch angles of the evolved state, overlap with
/// the known initial state, and the dynamical integral of <sz> (constant in time).
double geometric_phase_from_expectations(const ModelParams& params, double k, double t,
                                         const BlochVector& measured);

/// Same reconstruction fed with exact expectation values. Only Band::minus is supported.
double geometric_phase_from_tomography(const ModelParams& params, Band band, double k, double t);

}  // namespace fdqpt
