#include <algorithm>

#include "cssplit/kernels.hpp"
#include "site_ops.hpp"

namespace cssplit::kernels::serial {

using namespace detail;

Derivatives derivatives(const LatticeGrid& grid, const MatrixField& f) {
  Derivatives d{MatrixField(f.size()), MatrixField(f.size())};
  for (int j = 0; j < grid.ny(); ++j) {
    for (int i = 0; i < grid.nx(); ++i) {
      const std::size_t s = grid.site(i, j);
      complex_derivatives(grid, f, i, j, d.dz[s], d.dzbar[s]);
    }
  }
  return d;
}

MatrixField inverse(const MatrixField& f) {
  MatrixField out(f.size());
  for (std::size_t s = 0; s < f.size(); ++s) {
    out[s] = inverse_sl2(f[s]);
  }
  return out;
}

MatrixField product(const MatrixField& a, const MatrixField& b) {
  MatrixField out(a.size());
  for (std::size_t s = 0; s < a.size(); ++s) {
    out[s] = a[s] * b[s];
  }
  return out;
}

MatrixField exp_field(const MatrixField& x) {
  MatrixField out(x.size());
  for (std::size_t s = 0; s < x.size(); ++s) {
    out[s] = exp_traceless(x[s]);
  }
  return out;
}

MatrixField log_field(const MatrixField& h) {
  MatrixField out(h.size());
  for (std::size_t s = 0; s < h.size(); ++s) {
    out[s] = log_sl2(h[s]);
  }
  return out;
}

std::complex<double> trace_integral(const LatticeGrid& grid,
                                    const MatrixField& x,
                                    const MatrixField& y) {
  std::complex<double> acc{};
  for (std::size_t s = 0; s < x.size(); ++s) {
    acc += (x[s] * y[s]).trace();
  }
  return acc * grid.cell_area();
}

std::complex<double> wz_slice(const LatticeGrid& grid, const MatrixField& log_h,
                              double s) {
  std::complex<double> acc{};
  for (int j = 0; j < grid.ny(); ++j) {
    for (int i = 0; i < grid.nx(); ++i) {
      acc += wz_density(grid, log_h, s, i, j);
    }
  }
  return acc * grid.cell_area();
}

double flatness_max(const LatticeGrid& grid, const MatrixField& a_zbar,
                    const MatrixField& a_z) {
  double worst = 0.0;
  for (int j = 0; j < grid.ny(); ++j) {
    for (int i = 0; i < grid.nx(); ++i) {
      worst = std::max(worst, flatness_density(grid, a_zbar, a_z, i, j));
    }
  }
  return worst;
}

} // namespace cssplit::kernels::serial
