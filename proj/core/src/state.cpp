#include "wzeta/state.hpp"

#include <cmath>

namespace wzeta {

Amplitudes wzeta_amplitudes(const StatePrep& prep) {
  const double norm = 1.0 / std::sqrt(2.0 * prep.zeta + 2.0);
  Amplitudes amp;
  amp.c[BasisIndex(5).offset()] = norm;
  amp.c[BasisIndex(3).offset()] = std::polar(std::sqrt(prep.zeta) * norm, prep.phi);
  amp.c[BasisIndex(2).offset()] = std::polar(std::sqrt(prep.zeta + 1.0) * norm, prep.delta);
  return amp;
}

DensityMatrix initial_density(const StatePrep& prep) {
  const Amplitudes amp = wzeta_amplitudes(prep);
  DensityMatrix rho;
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 8; ++c) rho(r, c) = amp.c[r] * std::conj(amp.c[c]);
  }
  return rho;
}

DensityMatrix dephase(const DensityMatrix& initial, const FactorTriple& factors) {
  DensityMatrix rho = initial;
  auto scale = [&rho](BasisIndex mu, BasisIndex nu, std::complex<double> f) {
    const auto r = static_cast<std::size_t>(mu.offset());
    const auto c = static_cast<std::size_t>(nu.offset());
    rho(r, c) *= f;
    rho(c, r) = std::conj(rho(r, c));
  };
  scale(BasisIndex(2), BasisIndex(3), factors.f23);
  scale(BasisIndex(2), BasisIndex(5), factors.f25);
  scale(BasisIndex(3), BasisIndex(5), factors.f35);
  return rho;
}

DensityMatrix evolved_density(const StatePrep& prep, double t, const ModelParams& params) {
  return dephase(initial_density(prep), factor_triple(t, params));
}

}  // namespace wzeta
