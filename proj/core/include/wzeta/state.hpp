#pragma once

#include <array>
#include <complex>

#include "wzeta/decoherence.hpp"
#include "wzeta/matrix.hpp"
#include "wzeta/model.hpp"

namespace wzeta {

using DensityMatrix = Matrix8;

// Only offsets 1, 2 and 4 (|001>, |010>, |100>) are populated.
struct Amplitudes {
  std::array<std::complex<double>, 8> c{};

  const std::complex<double>& operator[](BasisIndex mu) const { return c[mu.offset()]; }
};

Amplitudes wzeta_amplitudes(const StatePrep& prep);

/// |W><W| built as an outer product, which stays finite at zeta = 0.
DensityMatrix initial_density(const StatePrep& prep);

/// Scales the (2,3), (2,5), (3,5) coherences and their mirrors by the given factors.
DensityMatrix dephase(const DensityMatrix& initial, const FactorTriple& factors);

DensityMatrix evolved_density(const StatePrep& prep, double t, const ModelParams& params);

}  // namespace wzeta
