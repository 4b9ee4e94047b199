#pragma once

#include <complex>
#include <cstdint>

namespace cssplit {

/// Unit-modulus phase exp(2*pi*i * numerator/denominator), kept as an exact
/// rational number of turns reduced to [0, 1).
class ExactPhase {
public:
  ExactPhase() = default;
  ExactPhase(std::int64_t numerator, std::int64_t denominator);

  static ExactPhase identity() { return {}; }

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }
  bool is_identity() const noexcept { return num_ == 0; }

  ExactPhase inverse() const { return {-num_, den_}; }
  /// phase^n
  ExactPhase pow(std::int64_t n) const;

  std::complex<double> to_complex() const;

  friend ExactPhase operator*(const ExactPhase& a, const ExactPhase& b);
  ExactPhase& operator*=(const ExactPhase& o) { return *this = *this * o; }
  friend ExactPhase operator/(const ExactPhase& a, const ExactPhase& b) {
    return a * b.inverse();
  }
  friend bool operator==(const ExactPhase&, const ExactPhase&) = default;

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

} // namespace cssplit
