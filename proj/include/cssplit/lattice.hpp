#pragma once

// Periodic lattice discretization of the unit torus and 2x2 matrix-valued
// fields on it.
//
// Complex coordinates: z = x + i y, d_z = (d_x - i d_y)/2,
// d_zbar = (d_x + i d_y)/2. Integrals are over d^2x = dx dy.
// Lie-algebra components use the anti-Hermitian basis t_a = -i sigma_a / 2
// with Tr(t_a t_b) = -delta_ab / 2, so X^a = -2 Tr(t_a X) = i Tr(sigma_a X)
// and X^a Y^a = -2 Tr(X Y).

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace cssplit {

using Mat2 = Eigen::Matrix2cd;
using MatrixField = std::vector<Mat2>;
using Components = Eigen::Vector3cd;
using AlgebraField = std::vector<Components>;

class LatticeGrid {
public:
  /// Both sizes must be even and at least 8.
  LatticeGrid(int nx, int ny);
  explicit LatticeGrid(int n) : LatticeGrid(n, n) {}

  int nx() const noexcept { return nx_; }
  int ny() const noexcept { return ny_; }
  double hx() const noexcept { return 1.0 / nx_; }
  double hy() const noexcept { return 1.0 / ny_; }
  double cell_area() const noexcept { return hx() * hy(); }
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_);
  }
  /// Row-major index with x fastest; coordinates wrap periodically.
  std::size_t site(int i, int j) const noexcept {
    const int ii = ((i % nx_) + nx_) % nx_;
    const int jj = ((j % ny_) + ny_) % ny_;
    return static_cast<std::size_t>(jj) * nx_ + ii;
  }
  double x(int i) const noexcept { return i * hx(); }
  double y(int j) const noexcept { return j * hy(); }

  friend bool operator==(const LatticeGrid&, const LatticeGrid&) = default;

private:
  int nx_;
  int ny_;
};

enum class GroupClass { SL2C, PositiveHermitian, SU2 };

/// Group-valued field with det = 1 at every site (tolerance 1e-12);
/// PositiveHermitian and SU2 values are also checked for their class.
class LatticeGroupField {
public:
  LatticeGroupField(LatticeGrid grid, MatrixField values, GroupClass cls);

  const LatticeGrid& grid() const noexcept { return grid_; }
  const MatrixField& values() const noexcept { return values_; }
  GroupClass group_class() const noexcept { return cls_; }
  const Mat2& operator[](std::size_t s) const { return values_[s]; }

private:
  LatticeGrid grid_;
  MatrixField values_;
  GroupClass cls_;
};

/// Traceless gauge potentials A_zbar and A_z (or the KN partner of A_zbar).
struct LatticeGaugeField {
  LatticeGrid grid;
  MatrixField a_zbar;
  MatrixField a_z;
};

/// Pauli matrices sigma_1..3.
const Mat2& pauli(int a);

/// exp of a traceless 2x2 matrix in closed form.
Mat2 exp_traceless(const Mat2& x);
/// Principal logarithm of an SL(2,C) matrix. Throws DomainError when an
/// eigenvalue lies on the closed negative real axis.
Mat2 log_sl2(const Mat2& m);
/// Largest singular value.
double spectral_norm(const Mat2& m);

/// Components X^a in the t_a basis.
Components components(const Mat2& x);
Mat2 from_components(const Components& c);

} // namespace cssplit
