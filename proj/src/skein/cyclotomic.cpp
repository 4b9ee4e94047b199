#include "cssplit/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "cssplit/error.hpp"

namespace cssplit {

namespace {

// Exact quotient of monic-divisor polynomial division; throws if inexact.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num,
                                       const std::vector<std::int64_t>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    quot[i - dn] = c;
    if (c == 0) {
      continue;
    }
    for (std::size_t j = 0; j <= dn; ++j) {
      num[i - dn + j] = checked::add(num[i - dn + j], -checked::mul(c, den[j]));
    }
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) {
      throw std::logic_error("cyclotomic division left a remainder");
    }
  }
  return quot;
}

void check_level(int level) {
  if (level < 1) {
    throw DomainError("level must be at least 1, got " + std::to_string(level));
  }
}

} // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) {
        n /= p;
      }
      result -= result / p;
    }
  }
  if (n > 1) {
    result -= result / n;
  }
  return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<std::int64_t>> cache;
  if (n < 1) {
    throw std::invalid_argument("cyclotomic index must be positive");
  }
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) {
      return it->second;
    }
  }
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<std::int64_t> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) {
      poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
    }
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

RootOfUnityScalar::RootOfUnityScalar(int level) : level_(level) {
  check_level(level);
  coeffs_.assign(euler_phi(order()), 0);
}

RootOfUnityScalar RootOfUnityScalar::reduce(int level,
                                            std::vector<std::int64_t> raw) {
  RootOfUnityScalar out(level);
  const int n = out.order();
  // A^n = 1
  std::vector<std::int64_t> folded(n, 0);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto& slot = folded[i % n];
    slot = checked::add(slot, raw[i]);
  }
  // Phi_n(A) = 0
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = folded.size(); i-- > deg;) {
    const std::int64_t c = folded[i];
    if (c == 0) {
      continue;
    }
    for (std::size_t j = 0; j <= deg; ++j) {
      auto& slot = folded[i - deg + j];
      slot = checked::add(slot, -checked::mul(c, phi[j]));
    }
  }
  std::copy(folded.begin(), folded.begin() + deg, out.coeffs_.begin());
  return out;
}

RootOfUnityScalar RootOfUnityScalar::integer(int level, std::int64_t value) {
  RootOfUnityScalar out(level);
  out.coeffs_[0] = value;
  return out;
}

RootOfUnityScalar RootOfUnityScalar::a_power(int level, int exponent) {
  check_level(level);
  const int n = 4 * (level + 2);
  const int e = ((exponent % n) + n) % n;
  std::vector<std::int64_t> raw(e + 1, 0);
  raw[e] = 1;
  return reduce(level, std::move(raw));
}

RootOfUnityScalar RootOfUnityScalar::from_laurent(const LaurentPolynomial& p,
                                                  int level) {
  check_level(level);
  const int n = 4 * (level + 2);
  std::vector<std::int64_t> raw(n, 0);
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int e = p.min_exponent() + static_cast<int>(i);
    auto& slot = raw[((e % n) + n) % n];
    slot = checked::add(slot, c[i]);
  }
  return reduce(level, std::move(raw));
}

bool RootOfUnityScalar::is_zero() const noexcept {
  for (auto c : coeffs_) {
    if (c != 0) {
      return false;
    }
  }
  return true;
}

std::complex<double> RootOfUnityScalar::to_complex() const {
  const long double step =
      std::numbers::pi_v<long double> / (2.0L * (level_ + 2));
  long double re = 0.0L;
  long double im = 0.0L;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) {
      continue;
    }
    const long double angle = step * static_cast<long double>(j);
    re += static_cast<long double>(coeffs_[j]) * std::cos(angle);
    im += static_cast<long double>(coeffs_[j]) * std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

void RootOfUnityScalar::require_same_level(const RootOfUnityScalar& o) const {
  if (o.level_ != level_) {
    throw DomainError("cannot combine scalars at levels " +
                      std::to_string(level_) + " and " +
                      std::to_string(o.level_));
  }
}

RootOfUnityScalar& RootOfUnityScalar::operator+=(const RootOfUnityScalar& o) {
  require_same_level(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = checked::add(coeffs_[i], o.coeffs_[i]);
  }
  return *this;
}

RootOfUnityScalar& RootOfUnityScalar::operator-=(const RootOfUnityScalar& o) {
  require_same_level(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = checked::add(coeffs_[i], -o.coeffs_[i]);
  }
  return *this;
}

RootOfUnityScalar operator*(const RootOfUnityScalar& a,
                            const RootOfUnityScalar& b) {
  a.require_same_level(b);
  std::vector<std::int64_t> raw(a.coeffs_.size() + b.coeffs_.size(), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      raw[i + j] =
          checked::add(raw[i + j], checked::mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return RootOfUnityScalar::reduce(a.level_, std::move(raw));
}

} // namespace cssplit
