#pragma once

// Numerical checks of the holomorphic-quantization identities on a periodic
// lattice: flatness of the Karabali-Nair potentials, the Polyakov-Wiegmann
// identity, the Gauss-law variation of exp(k S_WZW), Kahler potentials and
// the symplectic-form rewritings.
//
// WZW convention (fixed here and nowhere else):
//   S_WZW(H) = (1/2pi) Int Tr(d_z H d_zbar H^-1)
//            + (i/12pi) Int Tr(H^-1 dH)^3,
// with the WZ term on the cone H(s) = exp(s log H), s in [0, 1]. In this
// convention
//   S(gh) = S(g) + S(h) - (1/pi) Int Tr(g^-1 d_z g  d_zbar h h^-1).

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cssplit/lattice.hpp"
#include "cssplit/splitting.hpp"

namespace cssplit {

/// exp of a random smooth traceless field built from Fourier modes with
/// |n_x|, |n_y| <= 1 and scaled so that its largest spectral norm, sampled on
/// a 256x256 reference lattice, equals `amplitude`. The continuum field
/// depends on the seed only, so different grids sample the same function.
/// amplitude must lie in (0, 1].
LatticeGroupField random_field(const LatticeGrid& grid, GroupClass cls,
                               double amplitude, std::uint64_t seed);

/// The exponent of random_field: anti-Hermitian for SU2, Hermitian for
/// PositiveHermitian, general traceless for SL2C.
MatrixField random_algebra_field(const LatticeGrid& grid, GroupClass cls,
                                 double amplitude, std::uint64_t seed);

LatticeGroupField constant_field(const LatticeGrid& grid, const Mat2& value,
                                 GroupClass cls);
LatticeGroupField identity_field(const LatticeGrid& grid);

/// Pointwise product ab (class SU2 if both are SU2, otherwise SL2C).
LatticeGroupField multiply(const LatticeGroupField& a,
                           const LatticeGroupField& b);

/// a_zbar = -d_zbar U U^-1 and the holomorphic partner a_z = -d_z U U^-1.
LatticeGaugeField kn_fields(const LatticeGroupField& u);

/// Physical potentials: a_zbar = -d_zbar U U^-1, a_z = -(a_zbar)^dagger.
LatticeGaugeField physical_fields(const LatticeGroupField& u);

/// Max over sites of |d_z A_zbar - d_zbar A_z + [A_z, A_zbar]|.
double flatness_residual(const LatticeGaugeField& a);

struct ActionValue {
  std::complex<double> value;
  std::complex<double> kinetic;
  std::complex<double> wess_zumino;
  /// Branch ambiguity counter; the principal-log cone never leaves its
  /// branch, so this is always 0 for accepted inputs.
  int wz_branch = 0;
};

/// S_WZW with `s_points`-point Gauss-Legendre quadrature of the cone
/// (at least 16).
ActionValue wzw_action(const LatticeGroupField& h, int s_points = 16);

/// -(1/pi) Int Tr(a^-1 d_z a  d_zbar b b^-1).
std::complex<double> pw_cross_term(const LatticeGroupField& a,
                                   const LatticeGroupField& b);

/// |S(ab) - S(a) - S(b) - crossterm(a, b)|.
double pw_defect(const LatticeGroupField& a, const LatticeGroupField& b);

/// |k S(U_eps) - k S(U) - (k/2pi) Int eps^a d_z A^a_zbar| with
/// U_eps = exp(eps) U and A_zbar = -d_zbar U U^-1. `eps` is traceless.
double gauss_variation_check(const LatticeGroupField& u, const MatrixField& eps,
                             int k);

/// TMYM: (k/4pi) Int (At^a_zbar A^a_z + A^a_zbar At^a_z).
/// CS:   (k/2pi) Int A^a_zbar A^a_z (a_tilde is ignored).
/// Returned as a complex number so that reality can be checked.
std::complex<double> kahler_potential(const LatticeGaugeField& a,
                                      const LatticeGaugeField& a_tilde,
                                      const TheoryLevel& theory);

/// Tangent vector of the phase space: real-frame components A_1^a, A_2^a of
/// the gauge-field variation and of its partner (At for TMYM, E for YM;
/// unused for CS).
struct FieldVariation {
  LatticeGrid grid;
  AlgebraField a1;
  AlgebraField a2;
  AlgebraField p1;
  AlgebraField p2;
};

FieldVariation random_variation(const LatticeGrid& grid, std::uint64_t seed);

struct SymplecticValue {
  std::complex<double> value;
  /// TMYM: the B/C-coordinate form. YM: the tilde/hat difference form.
  std::optional<std::complex<double>> alternate;
};

/// Omega(v, w) with A_z = (A_1 + i A_2)/2, A_zbar = (A_1 - i A_2)/2:
///   CS:   (ik/2pi) Int (v_zbar w_z - w_zbar v_z)
///   TMYM: (ik/4pi) Int (dAt_zbar ^ dA_z + dA_zbar ^ dAt_z)
///   YM:   (ik/4pi) Int (dE_zbar ^ dA_z + dA_zbar ^ dE_z)
SymplecticValue symplectic_pairing(const TheoryLevel& theory,
                                   const FieldVariation& v,
                                   const FieldVariation& w);

// Verification suites -------------------------------------------------------

enum class Suite { flatness, pw, gauss, symplectic, all };

std::string to_string(Suite s);
Suite parse_suite(std::string_view text);

struct SuiteConfig {
  int grid = 32;
  double amplitude = 0.3;
  std::uint64_t seed = 0;
  int level = 2;
  /// Residual threshold; nullopt uses the suite default.
  std::optional<double> tol;
  /// Constant-U fixture instead of a random field (flatness and pw).
  bool constant_fixture = false;
};

/// One measured quantity, at the base grid and (for refinement studies) at
/// the refined grid or halved perturbation.
struct Residual {
  std::string quantity;
  double coarse = 0.0;
  std::optional<double> fine;
  std::optional<double> ratio;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerificationReport {
  std::string suite;
  int grid = 0;
  std::vector<Residual> residuals;
  bool converged = false;
};

/// Accepted window for refinement ratios.
inline constexpr double kMinRatio = 2.8;
inline constexpr double kMaxRatio = 5.6;

VerificationReport run_suite(Suite suite, const SuiteConfig& config);

} // namespace cssplit
