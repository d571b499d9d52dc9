#pragma once

#include <string>

#include "wzeta/sweep.hpp"

namespace wzeta {

inline constexpr int kSignificantDigits = 12;
inline constexpr double kColorScaleMax = 0.5;

/// %.12g rendering shared by every text format.
std::string format_number(double value);

/// Value as it appears once printed: the nearest double to its 12-digit rendering.
double rounded(double value);

std::string render_csv(const ResultTable& table);
std::string render_json(const ResultTable& table, const RunConfig& config);
std::string render_svg(const ResultTable& table, const RunConfig& config);

std::string render(const ResultTable& table, const RunConfig& config);

}  // namespace wzeta
