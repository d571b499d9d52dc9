#pragma once

#include <stdexcept>

#include "wzeta/decoherence.hpp"
#include "wzeta/eigen.hpp"
#include "wzeta/matrix.hpp"
#include "wzeta/model.hpp"
#include "wzeta/state.hpp"

namespace wzeta {

struct NegativityTriple {
  double n_a_bc = 0.0;
  double n_b_ca = 0.0;
  double n_c_ab = 0.0;

  double operator[](Subsystem s) const;
  double& operator[](Subsystem s);
};

class BranchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kImaginaryResidueTolerance = 1e-9;

/// Transposes the indices of one qubit: (rho^{T_s})_{r,c} = rho_{r',c'} where r', c' are r, c
/// with the s-qubit bit exchanged between them.
Matrix8 partial_transpose(const Matrix8& rho, Subsystem s);

/// Sum of absolute eigenvalues.
double trace_norm(const Matrix8& h);

/// (||rho^{T_s}||_1 - 1) / 2, unclamped. Round-off can leave it slightly below zero.
double negativity(const DensityMatrix& rho, Subsystem s);

NegativityTriple negativities(const DensityMatrix& rho);

/// Clamps round-off negatives to zero, used when values are reported.
inline double reported(double raw_negativity) { return raw_negativity < 0.0 ? 0.0 : raw_negativity; }

/// Closed-form negativity of the dephased W_zeta state, transcribed term for term (principal
/// complex square roots). Only the magnitudes of the factors enter. Singular at zeta = 0, where
/// std::domain_error is thrown; a residual imaginary part >= 1e-9 throws BranchError.
double closed_form_negativity(const StatePrep& prep, const FactorTriple& factors, Subsystem s);

}  // namespace wzeta
