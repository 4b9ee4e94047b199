#include "cssplit/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace cssplit {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("integer coefficient overflow");
  }
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("integer coefficient overflow");
  }
  return r;
}

} // namespace checked

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t c, int exponent) {
  LaurentPolynomial p;
  if (c != 0) {
    p.min_exp_ = exponent;
    p.coeffs_ = {c};
  }
  return p;
}

std::int64_t LaurentPolynomial::coefficient(int exponent) const noexcept {
  const int i = exponent - min_exp_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) {
    return 0;
  }
  return coeffs_[i];
}

void LaurentPolynomial::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](std::int64_t c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  min_exp_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  if (o.is_zero()) {
    return *this;
  }
  if (is_zero()) {
    return *this = o;
  }
  const int lo = std::min(min_exp_, o.min_exp_);
  const int hi = std::max(max_exponent(), o.max_exponent());
  std::vector<std::int64_t> out(hi - lo + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[min_exp_ - lo + i] = coeffs_[i];
  }
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    auto& slot = out[o.min_exp_ - lo + i];
    slot = checked::add(slot, o.coeffs_[i]);
  }
  min_exp_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  LaurentPolynomial neg = o;
  for (auto& c : neg.coeffs_) {
    c = checked::mul(c, -1);
  }
  return *this += neg;
}

LaurentPolynomial operator*(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  LaurentPolynomial out;
  if (a.is_zero() || b.is_zero()) {
    return out;
  }
  out.min_exp_ = a.min_exp_ + b.min_exp_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      auto& slot = out.coeffs_[i + j];
      slot = checked::add(slot, checked::mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  out.trim();
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(int n) const {
  if (n < 0) {
    // only monomials are invertible
    if (coeffs_.size() != 1 || (coeffs_[0] != 1 && coeffs_[0] != -1)) {
      throw std::domain_error("negative power of a non-unit polynomial");
    }
    return monomial(n % 2 == 0 ? 1 : coeffs_[0], n * min_exp_);
  }
  LaurentPolynomial result = constant(1);
  LaurentPolynomial base = *this;
  while (n > 0) {
    if (n & 1) {
      result *= base;
    }
    base *= base;
    n >>= 1;
  }
  return result;
}

std::complex<double> LaurentPolynomial::evaluate(std::complex<double> x) const {
  // Horner from the top, then scale by x^min
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + static_cast<double>(*it);
  }
  return acc * std::pow(x, min_exp_);
}

std::string LaurentPolynomial::to_string(const std::string& var) const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  for (int e = max_exponent(); e >= min_exp_; --e) {
    const std::int64_t c = coefficient(e);
    if (c == 0) {
      continue;
    }
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
    } else if (c < 0) {
      out += "-";
    }
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1 || e == 0) {
      out += std::to_string(mag);
    }
    if (e != 0) {
      out += var;
      if (e != 1) {
        out += "^" + std::to_string(e);
      }
    }
  }
  return out;
}

} // namespace cssplit
