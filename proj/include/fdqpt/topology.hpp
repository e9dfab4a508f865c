#pragma once

#include <utility>

#include "fdqpt/model.hpp"

namespace fdqpt {

inline constexpr int kDefaultChiralKPoints = 4001;
/// Origin-proximity threshold for the planar vector, relative to ModelParams::scale().
inline constexpr double kWindingFloor = 1e-8;

struct ChiralInvariants {
    int w1 = 0;
    int w2 = 0;
    int w0 = 0;   ///< (w1 + w2) / 2, zero-quasienergy edge modes
    int wpi = 0;  ///< (w1 - w2) / 2, pi-quasienergy edge modes
    double w1_raw = 0.0;
    double w2_raw = 0.0;
};

struct SymmetricFrameOperators {
    Mat2 u1;
    Mat2 u2;
};

/// U1 = -exp(-i{(h_z - w/2) sz + h_xy sx} T), U2 the same with h_xy -> -h_xy.
/// Both obey sy U sy = U^dagger.
SymmetricFrameOperators symmetric_frame_operators(const ModelParams& params, double k);

/// Winding of (h_z - w/2, +-h_xy) over k in [-pi, pi] (endpoints identified).
/// Throws GapClosure when the vector comes within kWindingFloor * scale of the origin.
ChiralInvariants chiral_winding_numbers(const ModelParams& params,
                                        int k_points = kDefaultChiralKPoints);

/// (w - delta2 - delta1)(w - delta2 + delta1) < 0: the effective-Hamiltonian ellipse
/// encircles the origin.
bool encircling_condition(const ModelParams& params);

}  // namespace fdqpt
