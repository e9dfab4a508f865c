#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdqpt/model.hpp"

namespace fdqpt {

struct Preset {
    std::string name;
    ModelParams params;
    std::string time_unit;  ///< empty for dimensionless presets
};

/// example1, example2, example3, nv-plus, nv-minus.
const std::vector<Preset>& presets();

std::optional<Preset> find_preset(std::string_view name);

/// Sampling times (us) of the NV-center measurement sweep, 0 to 0.6 us.
const std::vector<double>& nv_sampling_times();

}  // namespace fdqpt
