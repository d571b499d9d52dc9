#pragma once

#include <array>

#include "wzeta/model.hpp"

namespace wzeta {

/// Effective transverse field seen by the chain when the qubits sit in basis state mu:
/// lambda_mu = s_A g_A + s_B g_B + s_C g_C + eta, with s_X = +1 for bit 0 and -1 for bit 1.
struct LambdaSpectrum {
  std::array<double, 8> values{};

  double operator[](BasisIndex mu) const { return values[mu.offset()]; }
};

struct BogoliubovAngle {
  double theta = 0.0;       // in (-pi, pi]
  bool degenerate = false;  // both arctangent arguments were exactly zero
};

struct ModeData {
  double theta = 0.0;
  double xi = 0.0;
};

LambdaSpectrum lambda_values(const ModelParams& params);

/// atan2(gamma sin x, lambda - cos x) with x = 2 pi k / N, folded into (-pi, pi].
BogoliubovAngle bogoliubov_angle(ModeIndex k, double lambda, const ModelParams& params);

/// Quasiparticle energy 2 alpha sin(4 pi k/N) + 2 sqrt(gamma^2 sin^2 x + (lambda - cos x)^2).
/// Can be negative when |alpha| is large; no reordering is attempted.
double mode_energy(ModeIndex k, double lambda, const ModelParams& params);

/// Thermal-state energy of the bare chain, i.e. mode_energy at lambda = eta.
double environment_energy(ModeIndex k, const ModelParams& params);

ModeData mode_data(ModeIndex k, double lambda, const ModelParams& params);

}  // namespace wzeta
