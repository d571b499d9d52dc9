#include "wzeta/presets.hpp"

#include <numbers>
#include <string>

namespace wzeta {

RunConfig figure_preset(std::string_view name) {
  if (name.size() != 4 || name.substr(0, 3) != "fig" || name[3] < '1' || name[3] > '9') {
    throw ConfigError("unknown preset '" + std::string(name) + "'");
  }
  const int figure = name[3] - '0';

  RunConfig config;
  config.params = ModelParams{};  // gamma 1, eta 1, alpha 1, g (0.1, 0.2, 0.3), N 51, T 0.5
  config.prep = StatePrep{50.0, std::numbers::pi / 2, std::numbers::pi / 2};
  config.partitions = {false, false, false};
  config.partitions[(figure - 1) % 3] = true;

  const SweepAxis time_axis{AxisName::t, 0.0, 2.0, kPresetSteps};
  if (figure <= 3) {
    config.axes = {SweepAxis{AxisName::zeta, 0.0, 50.0, kPresetSteps}, time_axis};
  } else if (figure <= 6) {
    config.axes = {SweepAxis{AxisName::alpha, -0.5, 1.0, kPresetSteps}, time_axis};
  } else {
    config.axes = {SweepAxis{AxisName::eta, 0.65, 2.0, kPresetSteps}, time_axis};
  }
  return config;
}

}  // namespace wzeta
