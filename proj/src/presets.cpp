#include "fdqpt/presets.hpp"

namespace fdqpt {

namespace {

ModelParams make(double omega_drive, double delta1, double delta2, double omega_amp) {
    ModelParams p;
    p.omega_drive = omega_drive;
    p.delta1 = delta1;
    p.delta2 = delta2;
    p.omega_amp = omega_amp;
    return p;
}

// Angular frequencies in rad/us: 2 pi x MHz.
constexpr double kMHz = kTwoPi;

}  // namespace

const std::vector<Preset>& presets() {
    static const std::vector<Preset> table = {
        {"example1", make(kPi, kPi, kPi / 2, 1.0), ""},
        {"example2", make(kPi, kPi / 5, kPi / 2, 1.0), ""},
        {"example3", make(kPi, -kPi, kPi / 2, 1.0), ""},
        {"nv-plus", make(5 * kMHz, 5 * kMHz, 5 * kMHz, 10 * kMHz), "us"},
        {"nv-minus", make(5 * kMHz, 5 * kMHz, -5 * kMHz, 10 * kMHz), "us"},
    };
    return table;
}

std::optional<Preset> find_preset(std::string_view name) {
    for (const Preset& p : presets()) {
        if (p.name == name) return p;
    }
    return std::nullopt;
}

const std::vector<double>& nv_sampling_times() {
    // 0.02 us spacing, refined to 0.002 us within 6 ns of 0.1, 0.3, 0.5 us.
    static const std::vector<double> times = {
        0.000, 0.020, 0.040, 0.060, 0.080, 0.094, 0.096, 0.098, 0.100, 0.102,
        0.104, 0.106, 0.120, 0.140, 0.160, 0.180, 0.200, 0.220, 0.240, 0.260,
        0.280, 0.294, 0.296, 0.298, 0.300, 0.302, 0.304, 0.306, 0.320, 0.340,
        0.360, 0.380, 0.400, 0.420, 0.440, 0.460, 0.480, 0.494, 0.496, 0.498,
        0.500, 0.502, 0.504, 0.506, 0.520, 0.540, 0.560, 0.580, 0.600,
    };
    return times;
}

}  // namespace fdqpt
