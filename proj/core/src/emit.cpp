#include "wzeta/emit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace wzeta {

namespace {

constexpr std::array<std::string_view, 3> kNegativityColumns{"n_a_bc", "n_b_ca", "n_c_ab"};
constexpr std::array<std::string_view, 3> kFactorColumns{"abs_f23", "abs_f25", "abs_f35"};
constexpr std::array<std::string_view, 3> kPanelTitles{"N(A-BC)", "N(B-CA)", "N(C-AB)"};

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Viridis anchors, interpolated linearly.
std::string color_for(double value) {
  static constexpr std::array<std::array<double, 3>, 5> kAnchors{{
      {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};
  double x = std::clamp(value / kColorScaleMax, 0.0, 1.0) * (kAnchors.size() - 1);
  const auto lo = std::min<std::size_t>(static_cast<std::size_t>(x), kAnchors.size() - 2);
  const double w = x - static_cast<double>(lo);
  char buf[8];
  int rgb[3];
  for (int c = 0; c < 3; ++c) {
    rgb[c] = static_cast<int>(std::lround(kAnchors[lo][c] * (1.0 - w) + kAnchors[lo + 1][c] * w));
  }
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";  // folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, value);
  return buf;
}

double rounded(double value) { return std::strtod(format_number(value).c_str(), nullptr); }

std::string render_csv(const ResultTable& table) {
  std::string out;
  for (AxisName axis : table.axes) {
    out += axis_label(axis);
    out += ',';
  }
  for (auto c : kNegativityColumns) {
    out += c;
    out += ',';
  }
  out += "abs_f23,abs_f25,abs_f35\n";

  for (const auto& row : table.rows) {
    for (std::size_t a = 0; a < table.axes.size(); ++a) out += format_number(row.axis[a]) + ',';
    for (Subsystem s : kAllSubsystems) {
      if (table.partitions[static_cast<int>(s)]) out += format_number(row.negativity[s]);
      out += ',';
    }
    out += format_number(row.abs_factor[0]) + ',' + format_number(row.abs_factor[1]) + ',' +
           format_number(row.abs_factor[2]) + '\n';
  }
  return out;
}

std::string render_json(const ResultTable& table, const RunConfig& config) {
  using nlohmann::ordered_json;
  ordered_json cfg;
  cfg["params"] = {{"gamma", config.params.gamma},
                   {"eta", config.params.eta},
                   {"alpha", config.params.alpha},
                   {"g_a", config.params.g_a},
                   {"g_b", config.params.g_b},
                   {"g_c", config.params.g_c},
                   {"chain_length", config.params.chain_length},
                   {"temperature", config.params.temperature}};
  cfg["state"] = {{"zeta", config.prep.zeta}, {"delta", config.prep.delta}, {"phi", config.prep.phi}};
  cfg["time"] = config.time;
  cfg["axes"] = ordered_json::array();
  for (const auto& axis : config.axes) {
    cfg["axes"].push_back({{"name", std::string(axis_label(axis.name))},
                           {"start", axis.start},
                           {"end", axis.end},
                           {"steps", axis.steps}});
  }
  cfg["partitions"] = ordered_json::array();
  for (Subsystem s : kAllSubsystems) {
    if (config.wants(s)) cfg["partitions"].push_back(std::string(1, subsystem_tag(s)));
  }
  cfg["format"] = std::string(format_label(config.format));

  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json r;
    for (std::size_t a = 0; a < table.axes.size(); ++a) r[std::string(axis_label(table.axes[a]))] = rounded(row.axis[a]);
    for (Subsystem s : kAllSubsystems) {
      const auto key = std::string(kNegativityColumns[static_cast<int>(s)]);
      if (table.partitions[static_cast<int>(s)]) {
        r[key] = rounded(row.negativity[s]);
      } else {
        r[key] = nullptr;
      }
    }
    for (std::size_t f = 0; f < 3; ++f) r[std::string(kFactorColumns[f])] = rounded(row.abs_factor[f]);
    rows.push_back(std::move(r));
  }

  ordered_json doc;
  doc["config"] = std::move(cfg);
  doc["rows"] = std::move(rows);
  return doc.dump(2) + '\n';
}

std::string render_svg(const ResultTable& table, const RunConfig& config) {
  // First axis runs along y (outer index); the second along x. A single axis becomes one strip.
  const std::size_t ny = static_cast<std::size_t>(config.axes[0].steps);
  const std::size_t nx = config.axes.size() == 2 ? static_cast<std::size_t>(config.axes[1].steps) : 1;
  const bool strip = config.axes.size() == 1;
  const std::size_t cols = strip ? ny : nx;
  const std::size_t rows = strip ? 1 : ny;

  constexpr double kPlot = 300.0;
  constexpr double kMarginLeft = 70.0, kMarginTop = 40.0, kMarginBottom = 60.0, kBar = 60.0;
  const double plot_h = strip ? 40.0 : kPlot;
  const double panel_w = kMarginLeft + kPlot + 20.0;
  const double panel_h = kMarginTop + plot_h + kMarginBottom;
  const double cell_w = kPlot / static_cast<double>(cols);
  const double cell_h = plot_h / static_cast<double>(rows);

  std::vector<Subsystem> panels;
  for (Subsystem s : kAllSubsystems) {
    if (config.wants(s)) panels.push_back(s);
  }
  const double width = panel_w * static_cast<double>(panels.size()) + kBar;

  const SweepAxis& x_axis = strip ? config.axes[0] : config.axes[1];
  const SweepAxis* y_axis = strip ? nullptr : &config.axes[0];

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width) << "\" height=\""
      << fixed(panel_h) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t p = 0; p < panels.size(); ++p) {
    const Subsystem s = panels[p];
    const double ox = panel_w * static_cast<double>(p) + kMarginLeft;
    const double oy = kMarginTop;
    svg << "<g id=\"panel-" << subsystem_tag(s) << "\">\n";
    svg << "<text x=\"" << fixed(ox + kPlot / 2) << "\" y=\"" << fixed(oy - 12)
        << "\" text-anchor=\"middle\" font-size=\"14\">" << kPanelTitles[static_cast<int>(s)] << "</text>\n";
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        const std::size_t index = strip ? c : r * nx + c;
        const double v = table.rows[index].negativity[s];
        // Row 0 of the outer axis sits at the bottom.
        const double y = oy + plot_h - cell_h * static_cast<double>(r + 1);
        svg << "<rect x=\"" << fixed(ox + cell_w * static_cast<double>(c)) << "\" y=\"" << fixed(y)
            << "\" width=\"" << fixed(cell_w + 0.01) << "\" height=\"" << fixed(cell_h + 0.01)
            << "\" fill=\"" << color_for(v) << "\"/>\n";
      }
    }
    svg << "<rect x=\"" << fixed(ox) << "\" y=\"" << fixed(oy) << "\" width=\"" << fixed(kPlot)
        << "\" height=\"" << fixed(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";
    const double base = oy + plot_h;
    svg << "<text x=\"" << fixed(ox) << "\" y=\"" << fixed(base + 16) << "\" text-anchor=\"start\">"
        << format_number(x_axis.start) << "</text>\n";
    svg << "<text x=\"" << fixed(ox + kPlot) << "\" y=\"" << fixed(base + 16) << "\" text-anchor=\"end\">"
        << format_number(x_axis.end) << "</text>\n";
    svg << "<text x=\"" << fixed(ox + kPlot / 2) << "\" y=\"" << fixed(base + 36)
        << "\" text-anchor=\"middle\">" << axis_label(x_axis.name) << "</text>\n";
    if (y_axis != nullptr) {
      svg << "<text x=\"" << fixed(ox - 6) << "\" y=\"" << fixed(base) << "\" text-anchor=\"end\">"
          << format_number(y_axis->start) << "</text>\n";
      svg << "<text x=\"" << fixed(ox - 6) << "\" y=\"" << fixed(oy + 10) << "\" text-anchor=\"end\">"
          << format_number(y_axis->end) << "</text>\n";
      svg << "<text x=\"" << fixed(ox - 40) << "\" y=\"" << fixed(oy + plot_h / 2)
          << "\" text-anchor=\"middle\" transform=\"rotate(-90 " << fixed(ox - 40) << ' '
          << fixed(oy + plot_h / 2) << ")\">" << axis_label(y_axis->name) << "</text>\n";
    }
    svg << "</g>\n";
  }

  // Color bar, 0 at the bottom, kColorScaleMax at the top.
  const double bx = panel_w * static_cast<double>(panels.size()) + 10.0;
  constexpr int kBarSteps = 50;
  svg << "<g id=\"colorbar\">\n";
  for (int i = 0; i < kBarSteps; ++i) {
    const double v = kColorScaleMax * (i + 0.5) / kBarSteps;
    const double h = plot_h / kBarSteps;
    svg << "<rect x=\"" << fixed(bx) << "\" y=\"" << fixed(kMarginTop + plot_h - h * (i + 1)) << "\" width=\"14\" height=\""
        << fixed(h + 0.01) << "\" fill=\"" << color_for(v) << "\"/>\n";
  }
  svg << "<text x=\"" << fixed(bx + 18) << "\" y=\"" << fixed(kMarginTop + plot_h) << "\">0</text>\n";
  svg << "<text x=\"" << fixed(bx + 18) << "\" y=\"" << fixed(kMarginTop + 10) << "\">"
      << format_number(kColorScaleMax) << "</text>\n";
  svg << "</g>\n</svg>\n";
  return svg.str();
}

std::string render(const ResultTable& table, const RunConfig& config) {
  switch (config.format) {
    case OutputFormat::json: return render_json(table, config);
    case OutputFormat::svg: return render_svg(table, config);
    case OutputFormat::csv: break;
  }
  return render_csv(table);
}

}  // namespace wzeta
