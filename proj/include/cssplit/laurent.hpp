#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace cssplit {

/// Integer Laurent polynomial in one variable. Stored trimmed: the lowest and
/// highest stored coefficients are nonzero, and zero is the empty vector.
/// Arithmetic throws std::overflow_error instead of wrapping.
class LaurentPolynomial {
public:
  LaurentPolynomial() = default;
  /// c * x^exponent
  static LaurentPolynomial monomial(std::int64_t c, int exponent);
  static LaurentPolynomial constant(std::int64_t c) { return monomial(c, 0); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int min_exponent() const noexcept { return min_exp_; }
  int max_exponent() const noexcept {
    return min_exp_ + static_cast<int>(coeffs_.size()) - 1;
  }
  std::int64_t coefficient(int exponent) const noexcept;
  const std::vector<std::int64_t>& coefficients() const noexcept {
    return coeffs_;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) {
    return *this = *this * o;
  }
  LaurentPolynomial pow(int n) const;

  std::complex<double> evaluate(std::complex<double> x) const;
  std::string to_string(const std::string& var = "A") const;

  friend bool operator==(const LaurentPolynomial&,
                         const LaurentPolynomial&) = default;

private:
  void trim();

  int min_exp_ = 0;
  std::vector<std::int64_t> coeffs_;
};

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
} // namespace checked

} // namespace cssplit
