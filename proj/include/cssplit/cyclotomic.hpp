#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cssplit/laurent.hpp"

namespace cssplit {

/// Coefficients (ascending) of the n-th cyclotomic polynomial.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

/// Euler totient, the degree of the n-th cyclotomic polynomial.
int euler_phi(int n);

/// Exact element of Z[A] with A = exp(i*pi / (2(k+2))), a primitive root of
/// unity of order N = 4(k+2).
///
/// The representation is canonical: an integer polynomial in A of degree
/// below phi(N), reduced modulo the N-th cyclotomic polynomial. Two scalars
/// are equal as complex numbers iff their coefficient vectors are equal.
class RootOfUnityScalar {
public:
  /// Zero at level k.
  explicit RootOfUnityScalar(int level);

  static RootOfUnityScalar integer(int level, std::int64_t value);
  /// A^exponent for any integer exponent.
  static RootOfUnityScalar a_power(int level, int exponent);
  /// Image of a Laurent polynomial in A.
  static RootOfUnityScalar from_laurent(const LaurentPolynomial& p, int level);

  int level() const noexcept { return level_; }
  /// Multiplicative order of A, 4(k+2).
  int order() const noexcept { return 4 * (level_ + 2); }
  const std::vector<std::int64_t>& coefficients() const noexcept {
    return coeffs_;
  }
  bool is_zero() const noexcept;

  std::complex<double> to_complex() const;

  RootOfUnityScalar& operator+=(const RootOfUnityScalar& o);
  RootOfUnityScalar& operator-=(const RootOfUnityScalar& o);
  friend RootOfUnityScalar operator+(RootOfUnityScalar a,
                                     const RootOfUnityScalar& b) {
    return a += b;
  }
  friend RootOfUnityScalar operator-(RootOfUnityScalar a,
                                     const RootOfUnityScalar& b) {
    return a -= b;
  }
  friend RootOfUnityScalar operator*(const RootOfUnityScalar& a,
                                     const RootOfUnityScalar& b);
  RootOfUnityScalar& operator*=(const RootOfUnityScalar& o) {
    return *this = *this * o;
  }

  friend bool operator==(const RootOfUnityScalar&,
                         const RootOfUnityScalar&) = default;

private:
  // Reduces a polynomial of arbitrary degree modulo A^N - 1 and Phi_N.
  static RootOfUnityScalar reduce(int level, std::vector<std::int64_t> raw);
  void require_same_level(const RootOfUnityScalar& o) const;

  int level_;
  std::vector<std::int64_t> coeffs_;
};

} // namespace cssplit
