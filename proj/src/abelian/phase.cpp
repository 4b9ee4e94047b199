#include "cssplit/phase.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "cssplit/laurent.hpp"

namespace cssplit {

ExactPhase::ExactPhase(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("phase denominator must be nonzero");
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  numerator %= denominator;
  if (numerator < 0) {
    numerator += denominator;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

ExactPhase ExactPhase::pow(std::int64_t n) const {
  // reduce first so the product stays small
  const std::int64_t reduced = ((n % den_) + den_) % den_;
  return {checked::mul(num_, reduced), den_};
}

ExactPhase operator*(const ExactPhase& a, const ExactPhase& b) {
  const std::int64_t g = std::gcd(a.den_, b.den_);
  const std::int64_t den = checked::mul(a.den_ / g, b.den_);
  const std::int64_t num = checked::add(checked::mul(a.num_, b.den_ / g),
                                        checked::mul(b.num_, a.den_ / g));
  return {num, den};
}

std::complex<double> ExactPhase::to_complex() const {
  // quarter turns are rendered without rounding noise
  if ((4 * num_) % den_ == 0) {
    switch ((4 * num_) / den_) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
  }
  const double turns = static_cast<double>(num_) / static_cast<double>(den_);
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

} // namespace cssplit
