#include "wzeta/decoherence.hpp"

#include <cmath>

namespace wzeta {

namespace {

struct ModeTerms {
  Complex a;
  Complex b;
  double xi_mu;
  double xi_nu;
  double xi_env;
};

// Both interference terms share u, v and the half-angle differences.
ModeTerms mode_terms(ModeIndex k, double lambda_mu, double lambda_nu, double t,
                     const ModelParams& params) {
  const ModeData mu = mode_data(k, lambda_mu, params);
  const ModeData nu = mode_data(k, lambda_nu, params);
  const ModeData env = mode_data(k, params.eta, params);

  const Complex i{0.0, 1.0};
  const Complex u = 1.0 - std::exp(2.0 * i * t * mu.xi);
  const Complex v = 1.0 - std::exp(-2.0 * i * t * nu.xi);

  const double half_mu = 0.5 * (mu.theta - env.theta);
  const double half_nu = 0.5 * (nu.theta - env.theta);
  const double half_mn = 0.5 * (mu.theta - nu.theta);

  const double s_mu = std::sin(half_mu);
  const double s_nu = std::sin(half_nu);
  const double c_mu = std::cos(half_mu);
  const double c_nu = std::cos(half_nu);
  const double c_mn = std::cos(half_mn);

  ModeTerms terms;
  terms.a = u * v * (s_mu * s_nu * c_mn) - u * (s_mu * s_mu) - v * (s_nu * s_nu) + 1.0;
  terms.b = u * v * (c_mu * c_nu * c_mn) - u * (c_mu * c_mu) - v * (c_nu * c_nu) + 1.0;
  terms.xi_mu = mu.xi;
  terms.xi_nu = nu.xi;
  terms.xi_env = env.xi;
  return terms;
}

}  // namespace

Complex mode_term_A(ModeIndex k, BasisIndex mu, BasisIndex nu, double t, const ModelParams& params) {
  const LambdaSpectrum lambda = lambda_values(params);
  return mode_terms(k, lambda[mu], lambda[nu], t, params).a;
}

Complex mode_term_B(ModeIndex k, BasisIndex mu, BasisIndex nu, double t, const ModelParams& params) {
  const LambdaSpectrum lambda = lambda_values(params);
  return mode_terms(k, lambda[mu], lambda[nu], t, params).b;
}

Complex decoherence_factor(BasisIndex mu, BasisIndex nu, double t, const ModelParams& params) {
  const LambdaSpectrum lambda = lambda_values(params);
  const double beta = params.beta();
  const Complex i{0.0, 1.0};

  Complex product{1.0, 0.0};
  for (int k = 1; k <= params.mode_count(); ++k) {
    const ModeTerms m = mode_terms(ModeIndex(k, params), lambda[mu], lambda[nu], t, params);
    const double weight = std::exp(-beta * m.xi_env);
    const double z_k = (1.0 + weight) * (1.0 + weight);
    const Complex lead = std::exp(i * t * (m.xi_mu - m.xi_nu));
    const Complex middle = 2.0 * weight * std::exp(i * t * (m.xi_nu - m.xi_mu));
    product *= lead / z_k * (m.a + middle + weight * weight * m.b);
  }
  return product;
}

FactorTriple factor_triple(double t, const ModelParams& params) {
  const BasisIndex e2{2}, e3{3}, e5{5};
  return {decoherence_factor(e2, e3, t, params), decoherence_factor(e2, e5, t, params),
          decoherence_factor(e3, e5, t, params), t};
}

}  // namespace wzeta
