#include "wzeta/matrix.hpp"

#include <algorithm>

namespace wzeta {

Matrix8 Matrix8::identity() {
  Matrix8 m;
  for (std::size_t i = 0; i < kDim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix8 Matrix8::adjoint() const {
  Matrix8 out;
  for (std::size_t r = 0; r < kDim; ++r) {
    for (std::size_t c = 0; c < kDim; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

Matrix8::value_type Matrix8::trace() const {
  value_type sum{};
  for (std::size_t i = 0; i < kDim; ++i) sum += (*this)(i, i);
  return sum;
}

Matrix8& Matrix8::operator+=(const Matrix8& other) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix8& Matrix8::operator-=(const Matrix8& other) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix8& Matrix8::operator*=(double scale) {
  for (auto& v : data_) v *= scale;
  return *this;
}

Matrix8 operator*(const Matrix8& a, const Matrix8& b) {
  Matrix8 out;
  for (std::size_t r = 0; r < Matrix8::kDim; ++r) {
    for (std::size_t k = 0; k < Matrix8::kDim; ++k) {
      const auto lhs = a(r, k);
      if (lhs == Matrix8::value_type{}) continue;
      for (std::size_t c = 0; c < Matrix8::kDim; ++c) out(r, c) += lhs * b(k, c);
    }
  }
  return out;
}

double hermiticity_defect(const Matrix8& m) {
  double worst = 0.0;
  for (std::size_t r = 0; r < Matrix8::kDim; ++r) {
    for (std::size_t c = r; c < Matrix8::kDim; ++c) {
      worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
    }
  }
  return worst;
}

double max_abs_difference(const Matrix8& a, const Matrix8& b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < Matrix8::kDim; ++r) {
    for (std::size_t c = 0; c < Matrix8::kDim; ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  }
  return worst;
}

}  // namespace wzeta
