#include "wzeta/chain_spectrum.hpp"

#include <cmath>
#include <numbers>

namespace wzeta {

namespace {

double mode_phase(ModeIndex k, const ModelParams& params) {
  return 2.0 * std::numbers::pi * k.value() / params.chain_length;
}

}  // namespace

LambdaSpectrum lambda_values(const ModelParams& params) {
  LambdaSpectrum spectrum;
  for (int offset = 0; offset < 8; ++offset) {
    const double s_a = (offset & 4) ? -1.0 : 1.0;
    const double s_b = (offset & 2) ? -1.0 : 1.0;
    const double s_c = (offset & 1) ? -1.0 : 1.0;
    spectrum.values[offset] = s_a * params.g_a + s_b * params.g_b + s_c * params.g_c + params.eta;
  }
  return spectrum;
}

BogoliubovAngle bogoliubov_angle(ModeIndex k, double lambda, const ModelParams& params) {
  const double x = mode_phase(k, params);
  const double num = params.gamma * std::sin(x);
  const double den = lambda - std::cos(x);
  if (num == 0.0 && den == 0.0) return {0.0, true};
  double theta = std::atan2(num, den);
  // atan2 returns -pi for a negative-zero numerator; the branch is (-pi, pi].
  if (theta <= -std::numbers::pi) theta = std::numbers::pi;
  return {theta, false};
}

double mode_energy(ModeIndex k, double lambda, const ModelParams& params) {
  const double x = mode_phase(k, params);
  const double s = params.gamma * std::sin(x);
  const double d = lambda - std::cos(x);
  return 2.0 * params.alpha * std::sin(2.0 * x) + 2.0 * std::sqrt(s * s + d * d);
}

double environment_energy(ModeIndex k, const ModelParams& params) {
  return mode_energy(k, params.eta, params);
}

ModeData mode_data(ModeIndex k, double lambda, const ModelParams& params) {
  return {bogoliubov_angle(k, lambda, params).theta, mode_energy(k, lambda, params)};
}

}  // namespace wzeta
