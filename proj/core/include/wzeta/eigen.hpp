#pragma once

#include <array>
#include <stdexcept>

#include "wzeta/matrix.hpp"

namespace wzeta {

class CorruptStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kHermiticityTolerance = 1e-10;

/// Eigenvalues of a Hermitian 8x8 matrix in ascending order (cyclic complex Jacobi).
/// The input is symmetrized as (h + h^dagger)/2 first; a defect above kHermiticityTolerance
/// throws CorruptStateError.
std::array<double, 8> hermitian_eigenvalues(const Matrix8& h);

}  // namespace wzeta
