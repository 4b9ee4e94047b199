#include <algorithm>
#include <cstdint>

#include "cssplit/kernels.hpp"
#include "site_ops.hpp"

namespace cssplit::kernels::omp {

using namespace detail;

namespace {

// Runs body(i, j) over all sites in parallel.
template <class F>
void for_sites(const LatticeGrid& grid, F&& body) {
  const std::int64_t n = static_cast<std::int64_t>(grid.size());
  const int nx = grid.nx();
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < n; ++s) {
    body(static_cast<int>(s % nx), static_cast<int>(s / nx));
  }
}

template <class F>
void for_each_index(std::size_t size, F&& body) {
  const std::int64_t n = static_cast<std::int64_t>(size);
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < n; ++s) {
    body(static_cast<std::size_t>(s));
  }
}

} // namespace

Derivatives derivatives(const LatticeGrid& grid, const MatrixField& f) {
  Derivatives d{MatrixField(f.size()), MatrixField(f.size())};
  for_sites(grid, [&](int i, int j) {
    const std::size_t s = grid.site(i, j);
    complex_derivatives(grid, f, i, j, d.dz[s], d.dzbar[s]);
  });
  return d;
}

MatrixField inverse(const MatrixField& f) {
  MatrixField out(f.size());
  for_each_index(f.size(), [&](std::size_t s) { out[s] = inverse_sl2(f[s]); });
  return out;
}

MatrixField product(const MatrixField& a, const MatrixField& b) {
  MatrixField out(a.size());
  for_each_index(a.size(), [&](std::size_t s) { out[s] = a[s] * b[s]; });
  return out;
}

MatrixField exp_field(const MatrixField& x) {
  MatrixField out(x.size());
  for_each_index(x.size(), [&](std::size_t s) { out[s] = exp_traceless(x[s]); });
  return out;
}

MatrixField log_field(const MatrixField& h) {
  MatrixField out(h.size());
  // exceptions must not escape an OpenMP region
  std::vector<char> failed(h.size(), 0);
  for_each_index(h.size(), [&](std::size_t s) {
    try {
      out[s] = log_sl2(h[s]);
    } catch (...) {
      failed[s] = 1;
    }
  });
  for (std::size_t s = 0; s < h.size(); ++s) {
    if (failed[s]) {
      (void)log_sl2(h[s]); // rethrows the original error
    }
  }
  return out;
}

std::complex<double> trace_integral(const LatticeGrid& grid,
                                    const MatrixField& x,
                                    const MatrixField& y) {
  std::vector<std::complex<double>> site(x.size());
  for_each_index(x.size(), [&](std::size_t s) { site[s] = (x[s] * y[s]).trace(); });
  return pairwise_sum(site) * grid.cell_area();
}

std::complex<double> wz_slice(const LatticeGrid& grid, const MatrixField& log_h,
                              double s) {
  std::vector<std::complex<double>> site(grid.size());
  for_sites(grid, [&](int i, int j) {
    site[grid.site(i, j)] = wz_density(grid, log_h, s, i, j);
  });
  return pairwise_sum(site) * grid.cell_area();
}

double flatness_max(const LatticeGrid& grid, const MatrixField& a_zbar,
                    const MatrixField& a_z) {
  std::vector<double> site(grid.size());
  for_sites(grid, [&](int i, int j) {
    site[grid.site(i, j)] = flatness_density(grid, a_zbar, a_z, i, j);
  });
  return *std::max_element(site.begin(), site.end());
}

} // namespace cssplit::kernels::omp
