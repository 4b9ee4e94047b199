#include "cssplit/lattice.hpp"

#include <array>
#include <cmath>

#include "cssplit/error.hpp"

namespace cssplit {

namespace {
using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};
} // namespace

LatticeGrid::LatticeGrid(int nx, int ny) : nx_(nx), ny_(ny) {
  if (nx < 8 || ny < 8 || nx % 2 != 0 || ny % 2 != 0) {
    throw DomainError("grid sizes must be even and at least 8, got " +
                      std::to_string(nx) + "x" + std::to_string(ny));
  }
}

LatticeGroupField::LatticeGroupField(LatticeGrid grid, MatrixField values,
                                     GroupClass cls)
    : grid_(grid), values_(std::move(values)), cls_(cls) {
  if (values_.size() != grid_.size()) {
    throw DomainError("field size does not match its grid");
  }
  constexpr double tol = 1e-12;
  for (std::size_t s = 0; s < values_.size(); ++s) {
    const Mat2& m = values_[s];
    if (std::abs(m.determinant() - 1.0) > tol) {
      throw DomainError("field value at site " + std::to_string(s) +
                        " has det != 1");
    }
    const double scale = std::max(1.0, m.norm());
    switch (cls_) {
    case GroupClass::SL2C:
      break;
    case GroupClass::PositiveHermitian:
      if ((m - m.adjoint()).norm() > tol * scale || m.trace().real() <= 0.0) {
        throw DomainError("site " + std::to_string(s) +
                          " is not positive Hermitian");
      }
      break;
    case GroupClass::SU2:
      if ((m * m.adjoint() - Mat2::Identity()).norm() > tol * scale) {
        throw DomainError("site " + std::to_string(s) + " is not unitary");
      }
      break;
    }
  }
}

const Mat2& pauli(int a) {
  static const std::array<Mat2, 3> sigma = [] {
    std::array<Mat2, 3> s;
    s[0] << 0.0, 1.0, 1.0, 0.0;
    s[1] << 0.0, -kI, kI, 0.0;
    s[2] << 1.0, 0.0, 0.0, -1.0;
    return s;
  }();
  return sigma.at(a - 1);
}

Mat2 exp_traceless(const Mat2& x) {
  // X^2 = s^2 I for traceless X, so exp X = cosh(s) I + sinh(s)/s X
  const cd s2 = -x.determinant();
  const cd s = std::sqrt(s2);
  cd c;
  cd sinhc;
  if (std::abs(s) < 1e-4) {
    c = 1.0 + s2 / 2.0 + s2 * s2 / 24.0 + s2 * s2 * s2 / 720.0;
    sinhc = 1.0 + s2 / 6.0 + s2 * s2 / 120.0 + s2 * s2 * s2 / 5040.0;
  } else {
    c = std::cosh(s);
    sinhc = std::sinh(s) / s;
  }
  return c * Mat2::Identity() + sinhc * x;
}

Mat2 log_sl2(const Mat2& m) {
  const cd half_trace = m.trace() / 2.0;
  const cd root = std::sqrt(half_trace * half_trace - m.determinant());
  const std::array<cd, 2> eig{half_trace + root, half_trace - root};
  for (const cd& lambda : eig) {
    if (lambda.real() <= 0.0 &&
        std::abs(lambda.imag()) <= 1e-12 * std::max(1.0, std::abs(lambda))) {
      throw DomainError("field outside principal-log domain");
    }
  }
  const cd s = std::log(eig[0]);
  // X = s / sinh(s) (M - cosh(s) I), cosh(s) = tr M / 2
  cd ratio;
  if (std::abs(s) < 1e-4) {
    const cd s2 = s * s;
    ratio = 1.0 - s2 / 6.0 + 7.0 * s2 * s2 / 360.0;
  } else {
    ratio = s / std::sinh(s);
  }
  Mat2 x = ratio * (m - half_trace * Mat2::Identity());
  // remove rounding drift from the trace
  const cd tr = x.trace() / 2.0;
  x -= tr * Mat2::Identity();
  return x;
}

double spectral_norm(const Mat2& m) {
  const double fro2 = m.squaredNorm();
  const double det2 = std::norm(m.determinant());
  const double disc = std::max(0.0, fro2 * fro2 - 4.0 * det2);
  return std::sqrt((fro2 + std::sqrt(disc)) / 2.0);
}

Components components(const Mat2& x) {
  Components c;
  for (int a = 1; a <= 3; ++a) {
    c[a - 1] = kI * (pauli(a) * x).trace();
  }
  return c;
}

Mat2 from_components(const Components& c) {
  Mat2 x = Mat2::Zero();
  for (int a = 1; a <= 3; ++a) {
    x += c[a - 1] * (-kI / 2.0) * pauli(a);
  }
  return x;
}

} // namespace cssplit
