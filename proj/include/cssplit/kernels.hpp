#pragma once

// Lattice kernels. `omp` is the production implementation: per-site work is
// parallel, and reductions go through a per-site buffer summed in a fixed
// pairwise order so results do not depend on the thread count. `serial` is
// the straightforward single-threaded reference kept for testing and
// benchmarking; its sums accumulate left to right, so agreement with `omp`
// is to rounding, not bitwise.

#include <complex>

#include "cssplit/lattice.hpp"

namespace cssplit::kernels {

struct Derivatives {
  MatrixField dz;
  MatrixField dzbar;
};

#define CSSPLIT_KERNEL_DECLS                                                   \
  Derivatives derivatives(const LatticeGrid& grid, const MatrixField& f);      \
  MatrixField inverse(const MatrixField& f);                                   \
  MatrixField product(const MatrixField& a, const MatrixField& b);             \
  MatrixField exp_field(const MatrixField& x);                                 \
  MatrixField log_field(const MatrixField& h);                                 \
  /* sum_s h^2 Tr(X_s Y_s) */                                                  \
  std::complex<double> trace_integral(const LatticeGrid& grid,                 \
                                      const MatrixField& x,                    \
                                      const MatrixField& y);                   \
  /* sum_s h^2 Tr(L [R_x, R_y]), R = H^-1 dH, H = exp(s L) on the cone */      \
  std::complex<double> wz_slice(const LatticeGrid& grid,                       \
                                const MatrixField& log_h, double s);           \
  /* max_s |d_z A_zbar - d_zbar A_z + [A_z, A_zbar]| (Frobenius) */            \
  double flatness_max(const LatticeGrid& grid, const MatrixField& a_zbar,      \
                      const MatrixField& a_z);

namespace serial {
CSSPLIT_KERNEL_DECLS
}
namespace omp {
CSSPLIT_KERNEL_DECLS
}

#undef CSSPLIT_KERNEL_DECLS

} // namespace cssplit::kernels
