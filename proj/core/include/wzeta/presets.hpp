#pragma once

#include <string_view>

#include "wzeta/sweep.hpp"

namespace wzeta {

inline constexpr int kPresetSteps = 51;

/// Parameter studies fig1..fig9: (zeta, t) for 1-3, (alpha, t) for 4-6, (eta, t) for 7-9, with
/// partitions A, B, C cycling within each group. Unknown names throw ConfigError.
RunConfig figure_preset(std::string_view name);

}  // namespace wzeta
