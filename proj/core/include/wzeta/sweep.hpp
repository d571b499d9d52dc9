#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wzeta/decoherence.hpp"
#include "wzeta/entanglement.hpp"
#include "wzeta/model.hpp"

namespace wzeta {

enum class AxisName { t, zeta, alpha, eta, gamma, temperature, delta, phi, g_a, g_b, g_c };

std::string_view axis_label(AxisName name);
std::optional<AxisName> parse_axis_name(std::string_view text);

struct SweepAxis {
  AxisName name = AxisName::t;
  double start = 0.0;
  double end = 2.0;
  int steps = 51;

  double value(int i) const;
};

enum class OutputFormat { csv, json, svg };

std::string_view format_label(OutputFormat format);

struct RunConfig {
  ModelParams params;
  StatePrep prep{1.0, 1.5707963267948966, 1.5707963267948966};
  double time = 0.0;  // used when no axis sweeps t
  std::vector<SweepAxis> axes{SweepAxis{}};
  std::array<bool, 3> partitions{true, true, true};
  OutputFormat format = OutputFormat::csv;
  std::string output_path;  // empty: standard output
  int workers = 1;

  bool wants(Subsystem s) const { return partitions[static_cast<int>(s)]; }
  std::size_t row_count() const;

  // Throws ConfigError. Checks model/state invariants at every axis endpoint.
  void validate() const;
};

struct ResultRow {
  std::array<double, 2> axis{};
  NegativityTriple negativity;  // clamped at zero; zero when the partition was not requested
  std::array<double, 3> abs_factor{};  // |F23|, |F25|, |F35|
};

struct ResultTable {
  std::vector<AxisName> axes;
  std::array<bool, 3> partitions{true, true, true};
  std::vector<ResultRow> rows;
  double min_raw_negativity = 0.0;  // most negative unclamped value seen
};

/// One grid point: dephased state at the configured parameters.
ResultRow evaluate_point(const ModelParams& params, const StatePrep& prep, double t,
                         const std::array<bool, 3>& partitions, double* min_raw = nullptr);

/// Row-major over the axes (first axis outermost). Output is independent of config.workers.
ResultTable run_sweep(const RunConfig& config);

}  // namespace wzeta
