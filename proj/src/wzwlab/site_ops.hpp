#pragma once

// Per-site bodies shared by the serial and OpenMP kernels.

#include <complex>
#include <vector>

#include "cssplit/lattice.hpp"

namespace cssplit::kernels::detail {

inline Mat2 inverse_sl2(const Mat2& m) {
  const std::complex<double> det = m.determinant();
  Mat2 r;
  r << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return r / det;
}

/// Central differences at site (i, j).
inline void central(const LatticeGrid& g, const MatrixField& f, int i, int j,
                    Mat2& dx, Mat2& dy) {
  dx = (f[g.site(i + 1, j)] - f[g.site(i - 1, j)]) * (0.5 / g.hx());
  dy = (f[g.site(i, j + 1)] - f[g.site(i, j - 1)]) * (0.5 / g.hy());
}

inline void complex_derivatives(const LatticeGrid& g, const MatrixField& f,
                                int i, int j, Mat2& dz, Mat2& dzbar) {
  constexpr std::complex<double> I{0.0, 1.0};
  Mat2 dx;
  Mat2 dy;
  central(g, f, i, j, dx, dy);
  dz = 0.5 * (dx - I * dy);
  dzbar = 0.5 * (dx + I * dy);
}

/// Tr(L [R_x, R_y]) at (i, j) for H = exp(s L), with L given on the whole
/// lattice so the neighbours of H can be formed on the fly.
inline std::complex<double> wz_density(const LatticeGrid& g,
                                       const MatrixField& log_h, double s,
                                       int i, int j) {
  auto h_at = [&](int a, int b) { return exp_traceless(s * log_h[g.site(a, b)]); };
  const Mat2 hinv = inverse_sl2(h_at(i, j));
  const Mat2 rx = hinv * (h_at(i + 1, j) - h_at(i - 1, j)) * (0.5 / g.hx());
  const Mat2 ry = hinv * (h_at(i, j + 1) - h_at(i, j - 1)) * (0.5 / g.hy());
  return (log_h[g.site(i, j)] * (rx * ry - ry * rx)).trace();
}

inline double flatness_density(const LatticeGrid& g, const MatrixField& a_zbar,
                               const MatrixField& a_z, int i, int j) {
  Mat2 dz_bar_field;
  Mat2 unused;
  complex_derivatives(g, a_zbar, i, j, dz_bar_field, unused);
  Mat2 dzbar_z_field;
  complex_derivatives(g, a_z, i, j, unused, dzbar_z_field);
  const std::size_t s = g.site(i, j);
  const Mat2 comm = a_z[s] * a_zbar[s] - a_zbar[s] * a_z[s];
  return (dz_bar_field - dzbar_z_field + comm).norm();
}

/// Fixed-order pairwise sum; the tree depends only on the length.
template <class T>
T pairwise_sum(const T* v, std::size_t n) {
  if (n <= 8) {
    T acc{};
    for (std::size_t i = 0; i < n; ++i) {
      acc += v[i];
    }
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

template <class T>
T pairwise_sum(const std::vector<T>& v) {
  return pairwise_sum(v.data(), v.size());
}

} // namespace cssplit::kernels::detail
