#include "wzeta/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wzeta {

namespace {

constexpr std::size_t kDim = Matrix8::kDim;
constexpr int kMaxSweeps = 64;

double off_diagonal_norm(const Matrix8& h) {
  double sum = 0.0;
  for (std::size_t r = 0; r < kDim; ++r) {
    for (std::size_t c = 0; c < kDim; ++c) {
      if (r != c) sum += std::norm(h(r, c));
    }
  }
  return std::sqrt(sum);
}

double frobenius_norm(const Matrix8& h) {
  double sum = 0.0;
  for (std::size_t r = 0; r < kDim; ++r) {
    for (std::size_t c = 0; c < kDim; ++c) sum += std::norm(h(r, c));
  }
  return std::sqrt(sum);
}

// One unitary rotation H <- U^dagger H U that zeroes H(p, q). U = D R, where D removes the
// phase of H(p, q) and R is the real Jacobi rotation of the resulting symmetric 2x2 block.
void rotate(Matrix8& h, std::size_t p, std::size_t q) {
  using C = Matrix8::value_type;
  const double r = std::abs(h(p, q));
  const C phase = h(p, q) / r;
  const double app = h(p, p).real();
  const double aqq = h(q, q).real();

  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const C u_pp = c;
  const C u_pq = s;
  const C u_qp = -s * std::conj(phase);
  const C u_qq = c * std::conj(phase);

  for (std::size_t row = 0; row < kDim; ++row) {
    const C hp = h(row, p);
    const C hq = h(row, q);
    h(row, p) = hp * u_pp + hq * u_qp;
    h(row, q) = hp * u_pq + hq * u_qq;
  }
  for (std::size_t col = 0; col < kDim; ++col) {
    const C hp = h(p, col);
    const C hq = h(q, col);
    h(p, col) = std::conj(u_pp) * hp + std::conj(u_qp) * hq;
    h(q, col) = std::conj(u_pq) * hp + std::conj(u_qq) * hq;
  }
  h(p, q) = 0.0;
  h(q, p) = 0.0;
  h(p, p) = h(p, p).real();
  h(q, q) = h(q, q).real();
}

}  // namespace

std::array<double, 8> hermitian_eigenvalues(const Matrix8& input) {
  const double defect = hermiticity_defect(input);
  if (!(defect < kHermiticityTolerance)) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian (defect " << defect << "); state is corrupted";
    throw CorruptStateError(msg.str());
  }

  Matrix8 h = input + input.adjoint();
  h *= 0.5;

  const double scale = frobenius_norm(h);
  if (scale > 0.0) {
    const double threshold = 1e-15 * scale;
    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(h) > threshold; ++sweep) {
      for (std::size_t p = 0; p + 1 < kDim; ++p) {
        for (std::size_t q = p + 1; q < kDim; ++q) {
          if (std::abs(h(p, q)) > 1e-300) rotate(h, p, q);
        }
      }
    }
  }

  std::array<double, 8> values{};
  for (std::size_t i = 0; i < kDim; ++i) values[i] = h(i, i).real();
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace wzeta
