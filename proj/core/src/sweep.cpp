#include "wzeta/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "wzeta/state.hpp"

namespace wzeta {

namespace {

constexpr std::array<std::pair<AxisName, std::string_view>, 11> kAxisNames{{
    {AxisName::t, "t"},
    {AxisName::zeta, "zeta"},
    {AxisName::alpha, "alpha"},
    {AxisName::eta, "eta"},
    {AxisName::gamma, "gamma"},
    {AxisName::temperature, "temperature"},
    {AxisName::delta, "delta"},
    {AxisName::phi, "phi"},
    {AxisName::g_a, "g_a"},
    {AxisName::g_b, "g_b"},
    {AxisName::g_c, "g_c"},
}};

struct Point {
  ModelParams params;
  StatePrep prep;
  double t;
};

void assign(AxisName name, double v, Point& p) {
  switch (name) {
    case AxisName::t: p.t = v; break;
    case AxisName::zeta: p.prep.zeta = v; break;
    case AxisName::alpha: p.params.alpha = v; break;
    case AxisName::eta: p.params.eta = v; break;
    case AxisName::gamma: p.params.gamma = v; break;
    case AxisName::temperature: p.params.temperature = v; break;
    case AxisName::delta: p.prep.delta = v; break;
    case AxisName::phi: p.prep.phi = v; break;
    case AxisName::g_a: p.params.g_a = v; break;
    case AxisName::g_b: p.params.g_b = v; break;
    case AxisName::g_c: p.params.g_c = v; break;
  }
}

}  // namespace

std::string_view axis_label(AxisName name) {
  for (const auto& [n, label] : kAxisNames) {
    if (n == name) return label;
  }
  return "?";
}

std::optional<AxisName> parse_axis_name(std::string_view text) {
  for (const auto& [n, label] : kAxisNames) {
    if (label == text) return n;
  }
  return std::nullopt;
}

double SweepAxis::value(int i) const {
  if (steps <= 1) return start;
  if (i == steps - 1) return end;
  return start + (end - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

std::string_view format_label(OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::svg: return "svg";
  }
  return "?";
}

std::size_t RunConfig::row_count() const {
  std::size_t n = 1;
  for (const auto& axis : axes) n *= static_cast<std::size_t>(axis.steps);
  return n;
}

void RunConfig::validate() const {
  if (axes.empty() || axes.size() > 2) throw ConfigError("between one and two sweep axes are required");
  if (axes.size() == 2 && axes[0].name == axes[1].name) throw ConfigError("sweep axes must differ");
  if (std::none_of(partitions.begin(), partitions.end(), [](bool b) { return b; })) {
    throw ConfigError("at least one partition is required");
  }
  if (workers < 1) throw ConfigError("workers must be at least 1");
  for (const auto& axis : axes) {
    if (axis.steps < 1) throw ConfigError("sweep steps must be at least 1");
    if (!std::isfinite(axis.start) || !std::isfinite(axis.end)) throw ConfigError("sweep bounds must be finite");
    if (axis.start > axis.end) throw ConfigError("sweep start must not exceed end");
  }
  Point base{params, prep, time};
  if (!std::isfinite(time)) throw ConfigError("time must be finite");
  // Every swept field is affine in the index, so checking both endpoints covers the grid.
  for (int corner = 0; corner < (1 << axes.size()); ++corner) {
    Point p = base;
    for (std::size_t a = 0; a < axes.size(); ++a) {
      assign(axes[a].name, (corner >> a) & 1 ? axes[a].end : axes[a].start, p);
    }
    p.params.validate();
    p.prep.validate();
  }
}

ResultRow evaluate_point(const ModelParams& params, const StatePrep& prep, double t,
                         const std::array<bool, 3>& partitions, double* min_raw) {
  const FactorTriple factors = factor_triple(t, params);
  const DensityMatrix rho = dephase(initial_density(prep), factors);

  ResultRow row;
  for (Subsystem s : kAllSubsystems) {
    if (!partitions[static_cast<int>(s)]) continue;
    const double raw = negativity(rho, s);
    if (min_raw != nullptr) *min_raw = std::min(*min_raw, raw);
    row.negativity[s] = reported(raw);
  }
  row.abs_factor = {std::abs(factors.f23), std::abs(factors.f25), std::abs(factors.f35)};
  return row;
}

ResultTable run_sweep(const RunConfig& config) {
  config.validate();

  ResultTable table;
  for (const auto& axis : config.axes) table.axes.push_back(axis.name);
  table.partitions = config.partitions;

  const std::size_t total = config.row_count();
  const int inner_steps = config.axes.size() == 2 ? config.axes[1].steps : 1;
  table.rows.resize(total);
  std::vector<double> min_raw(total, 0.0);

  auto compute = [&](std::size_t index) {
    Point p{config.params, config.prep, config.time};
    ResultRow& row = table.rows[index];
    const int outer = static_cast<int>(index / static_cast<std::size_t>(inner_steps));
    const int inner = static_cast<int>(index % static_cast<std::size_t>(inner_steps));
    row.axis[0] = config.axes[0].value(outer);
    assign(config.axes[0].name, row.axis[0], p);
    if (config.axes.size() == 2) {
      row.axis[1] = config.axes[1].value(inner);
      assign(config.axes[1].name, row.axis[1], p);
    }
    const ResultRow point = evaluate_point(p.params, p.prep, p.t, config.partitions, &min_raw[index]);
    row.negativity = point.negativity;
    row.abs_factor = point.abs_factor;
  };

  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(config.workers), total);
  if (workers <= 1) {
    for (std::size_t i = 0; i < total; ++i) compute(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          try {
            for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) compute(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(total);
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  table.min_raw_negativity = *std::min_element(min_raw.begin(), min_raw.end());
  return table;
}

}  // namespace wzeta
