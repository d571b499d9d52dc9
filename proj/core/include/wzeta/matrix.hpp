#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace wzeta {

// Dense 8x8 complex matrix over the three-qubit computational basis, row-major, 0-based.
class Matrix8 {
 public:
  using value_type = std::complex<double>;
  static constexpr std::size_t kDim = 8;

  Matrix8() = default;

  static Matrix8 identity();

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * kDim + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * kDim + c]; }

  Matrix8 adjoint() const;
  value_type trace() const;

  Matrix8& operator+=(const Matrix8& other);
  Matrix8& operator-=(const Matrix8& other);
  Matrix8& operator*=(double scale);
  friend Matrix8 operator+(Matrix8 a, const Matrix8& b) { return a += b; }
  friend Matrix8 operator-(Matrix8 a, const Matrix8& b) { return a -= b; }
  friend Matrix8 operator*(Matrix8 a, double s) { return a *= s; }
  friend Matrix8 operator*(const Matrix8& a, const Matrix8& b);

  friend bool operator==(const Matrix8&, const Matrix8&) = default;

 private:
  std::array<value_type, kDim * kDim> data_{};
};

/// max |m - m^dagger| over all entries.
double hermiticity_defect(const Matrix8& m);

/// max |a - b| over all entries.
double max_abs_difference(const Matrix8& a, const Matrix8& b);

}  // namespace wzeta
