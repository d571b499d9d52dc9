#pragma once

#include <complex>

#include "wzeta/chain_spectrum.hpp"
#include "wzeta/model.hpp"

namespace wzeta {

using Complex = std::complex<double>;

/// The three coherence damping factors that act on a W_zeta state.
struct FactorTriple {
  Complex f23{1.0, 0.0};
  Complex f25{1.0, 0.0};
  Complex f35{1.0, 0.0};
  double time = 0.0;
};

/// Per-mode interference terms, evaluated with the chain data at lambda_mu, lambda_nu and eta.
Complex mode_term_A(ModeIndex k, BasisIndex mu, BasisIndex nu, double t, const ModelParams& params);
Complex mode_term_B(ModeIndex k, BasisIndex mu, BasisIndex nu, double t, const ModelParams& params);

/// F_{mu nu}(t): product over k = 1..M (ascending) of
///   e^{it(xi_mu - xi_nu)} / Z_k * (A_k + 2 e^{-beta xi_eta} e^{it(xi_nu - xi_mu)} + e^{-2 beta xi_eta} B_k)
/// with Z_k = (1 + e^{-beta xi_eta})^2.
Complex decoherence_factor(BasisIndex mu, BasisIndex nu, double t, const ModelParams& params);

FactorTriple factor_triple(double t, const ModelParams& params);

}  // namespace wzeta
