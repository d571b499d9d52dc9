#include <cmath>
#include <numbers>

#include "doctest.h"
#include "support.hpp"
#include "wzeta/decoherence.hpp"

using namespace wzeta;

namespace {

// Second transcription of the factor with every Bogoliubov angle shifted by a common offset.
// Only angle differences enter, so the offset must not change the result.
Complex shifted_angle_factor(int mu, int nu, double t, const ModelParams& p, double offset) {
  const auto lambda = lambda_values(p);
  const double lm = lambda.values[mu - 1], ln = lambda.values[nu - 1];
  const Complex i{0, 1};
  Complex f = 1.0;
  for (int k = 1; k <= p.mode_count(); ++k) {
    const double x = 2 * std::numbers::pi * k / p.chain_length;
    auto th = [&](double l) { return std::atan2(p.gamma * std::sin(x), l - std::cos(x)) + offset; };
    auto en = [&](double l) {
      return 2 * p.alpha * std::sin(2 * x) +
             2 * std::hypot(p.gamma * std::sin(x), l - std::cos(x));
    };
    const double xm = en(lm), xn = en(ln), xe = en(p.eta);
    const double dm = th(lm) - th(p.eta), dn = th(ln) - th(p.eta), dmn = th(lm) - th(ln);
    const Complex u = 1.0 - std::exp(2.0 * i * t * xm), v = 1.0 - std::exp(-2.0 * i * t * xn);
    const Complex a = u * v * std::sin(dm / 2) * std::sin(dn / 2) * std::cos(dmn / 2) -
                      u * std::pow(std::sin(dm / 2), 2) - v * std::pow(std::sin(dn / 2), 2) + 1.0;
    const Complex b = u * v * std::cos(dm / 2) * std::cos(dn / 2) * std::cos(dmn / 2) -
                      u * std::pow(std::cos(dm / 2), 2) - v * std::pow(std::cos(dn / 2), 2) + 1.0;
    const double w = std::exp(-xe / p.temperature);
    f *= std::exp(i * t * (xm - xn)) / ((1 + w) * (1 + w)) * (a + 2 * w * std::exp(i * t * (xn - xm)) + w * w * b);
  }
  return f;
}

constexpr int kPointer[3] = {2, 3, 5};

}  // namespace

TEST_CASE("mode terms are unity at t = 0, on the diagonal, and without coupling") {
  testing::Generator gen(3);
  for (int trial = 0; trial < 50; ++trial) {
    const ModelParams p = gen.random_params();
    const ModeIndex k(gen.integer(1, p.mode_count()), p);
    const BasisIndex mu(gen.integer(1, 8)), nu(gen.integer(1, 8));
    const double t = gen.uniform(0, 2);
    CHECK(std::abs(mode_term_A(k, mu, nu, 0.0, p) - 1.0) < 1e-14);
    CHECK(std::abs(mode_term_B(k, mu, nu, 0.0, p) - 1.0) < 1e-14);
    CHECK(std::abs(mode_term_A(k, mu, mu, t, p) - 1.0) < 1e-12);
    CHECK(std::abs(mode_term_B(k, mu, mu, t, p) - 1.0) < 1e-12);

    ModelParams free = p;
    free.g_a = free.g_b = free.g_c = 0.0;
    CHECK(std::abs(mode_term_A(k, mu, nu, t, free) - 1.0) < 1e-14);
  }
}

TEST_CASE("mode term B is unity at maximal angle mismatch") {
  // gamma = 0: lambda_1 = lambda_2 = 0.5 < cos x gives theta = pi, eta = 2 gives theta = 0.
  ModelParams p;
  p.gamma = 0.0;
  p.eta = 2.0;
  p.g_a = -1.5;
  p.g_b = 0.0;
  p.g_c = 0.0;
  const ModeIndex k(1, p);
  CHECK(std::cos(2 * std::numbers::pi / 51) > 0.5);
  for (double t : {0.3, 1.1, 1.9}) {
    CHECK(std::abs(mode_term_B(k, BasisIndex(1), BasisIndex(2), t, p) - 1.0) < 1e-12);
  }
}

TEST_CASE("frozen decoherence factors at the figure parameters, t = 1") {
  // Independent scratch transcription (numpy, double precision).
  const ModelParams p = testing::figure_params();
  const FactorTriple f = factor_triple(1.0, p);
  CHECK(f.time == 1.0);
  CHECK(std::abs(f.f23 - Complex(0.3618852202270242, -0.44102627610668765)) < 1e-10);
  CHECK(std::abs(f.f25 - Complex(-0.16859681562359793, -0.17641280105967816)) < 1e-10);
  CHECK(std::abs(f.f35 - Complex(-0.3365333398753325, -0.6768970593160644)) < 1e-10);
  for (Complex v : {f.f23, f.f25, f.f35}) {
    CHECK(std::abs(v) > 0.0);
    CHECK(std::abs(v) <= 1.0);
  }
}

TEST_CASE("factor triple reduces to ones at t = 0 and without coupling") {
  ModelParams p;
  const FactorTriple f0 = factor_triple(0.0, p);
  for (Complex v : {f0.f23, f0.f25, f0.f35}) CHECK(std::abs(v - 1.0) < 1e-12);
  p.g_a = p.g_b = p.g_c = 0.0;
  for (double t : {0.2, 0.9, 2.0}) {
    const FactorTriple f = factor_triple(t, p);
    for (Complex v : {f.f23, f.f25, f.f35}) CHECK(std::abs(v - 1.0) < 1e-12);
  }
}

TEST_CASE("decoherence factor identities over random draws") {
  testing::Generator gen(29);
  for (int trial = 0; trial < 50; ++trial) {
    const ModelParams p = trial % 2 ? gen.random_params() : testing::figure_params();
    const double t = gen.uniform(0, 2);
    const BasisIndex mu(gen.integer(1, 8));
    CHECK(std::abs(decoherence_factor(mu, mu, t, p) - 1.0) < 1e-12);
    for (int a = 1; a <= 8; ++a) {
      for (int b = a + 1; b <= 8; ++b) {
        const Complex f = decoherence_factor(BasisIndex(a), BasisIndex(b), t, p);
        CHECK(std::abs(f) <= 1.0 + 1e-12);
        CHECK(std::abs(decoherence_factor(BasisIndex(b), BasisIndex(a), t, p) - std::conj(f)) < 1e-12);
        if (trial < 2) CHECK(std::abs(decoherence_factor(BasisIndex(a), BasisIndex(b), 0.0, p) - 1.0) < 1e-12);
      }
    }
  }
}

TEST_CASE("coherence Gram matrix of the pointer states is positive semidefinite") {
  testing::Generator gen(31);
  for (int trial = 0; trial < 100; ++trial) {
    const ModelParams p = trial % 3 == 0 ? gen.random_params() : testing::figure_params();
    const double t = gen.uniform(0, 2);
    Eigen::Matrix3cd g;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        g(r, c) = decoherence_factor(BasisIndex(kPointer[r]), BasisIndex(kPointer[c]), t, p);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(g, Eigen::EigenvaluesOnly);
    CHECK(solver.eigenvalues()(0) >= -1e-10);
  }
}

TEST_CASE("a common shift of every Bogoliubov angle leaves the factor unchanged") {
  testing::Generator gen(37);
  for (int trial = 0; trial < 20; ++trial) {
    const ModelParams p = trial % 2 ? gen.random_params() : testing::figure_params();
    const double t = gen.uniform(0, 2);
    const int mu = kPointer[trial % 3], nu = kPointer[(trial + 1) % 3];
    const Complex lib = decoherence_factor(BasisIndex(mu), BasisIndex(nu), t, p);
    for (double offset : {0.0, 0.7, -2.0, std::numbers::pi}) {
      CHECK(std::abs(shifted_angle_factor(mu, nu, t, p, offset) - lib) < 1e-12);
    }
  }
}
