#pragma once

// Test-only helpers: random generators and an Eigen-backed reference eigensolve.

#include <Eigen/Dense>
#include <array>
#include <numbers>
#include <random>

#include "wzeta/matrix.hpp"
#include "wzeta/model.hpp"

namespace wzeta::testing {

inline ModelParams figure_params() { return ModelParams{}; }

inline Eigen::Matrix<std::complex<double>, 8, 8> to_eigen(const Matrix8& m) {
  Eigen::Matrix<std::complex<double>, 8, 8> out;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) out(r, c) = m(r, c);
  return out;
}

inline std::array<double, 8> reference_eigenvalues(const Matrix8& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<std::complex<double>, 8, 8>> solver(to_eigen(m), Eigen::EigenvaluesOnly);
  std::array<double, 8> out{};
  for (int i = 0; i < 8; ++i) out[i] = solver.eigenvalues()(i);
  return out;
}

inline double min_eigenvalue_reference(const Matrix8& m) { return reference_eigenvalues(m)[0]; }

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  ModelParams random_params() {
    ModelParams p;
    p.gamma = uniform(0.0, 2.0);
    p.alpha = uniform(-0.5, 1.0);
    p.eta = uniform(0.5, 2.0);
    p.temperature = uniform(0.1, 2.0);
    return p;
  }

  StatePrep random_prep() {
    return {uniform(0.0, 50.0), uniform(0.0, 2 * std::numbers::pi), uniform(0.0, 2 * std::numbers::pi)};
  }

  Matrix8 random_hermitian() {
    Matrix8 m;
    for (std::size_t r = 0; r < 8; ++r) {
      m(r, r) = uniform(-1.0, 1.0);
      for (std::size_t c = r + 1; c < 8; ++c) {
        m(r, c) = {uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
        m(c, r) = std::conj(m(r, c));
      }
    }
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace wzeta::testing
