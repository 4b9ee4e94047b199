#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cssplit/error.hpp"
#include "cssplit/kernels.hpp"
#include "cssplit/wzwlab.hpp"

using namespace cssplit;

namespace {

constexpr double kPi = std::numbers::pi;

// H = exp(f sigma_3), f = a cos(2 pi x); commuting, so the WZ term vanishes
// and S = -(1/4pi) Int |grad f|^2 = -pi a^2 / 2.
LatticeGroupField abelian_field(const LatticeGrid& g, double a) {
  MatrixField v(g.size());
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const double f = a * std::cos(2 * kPi * g.x(i));
      Mat2 m = Mat2::Zero();
      m(0, 0) = std::exp(f);
      m(1, 1) = std::exp(-f);
      v[g.site(i, j)] = m;
    }
  }
  return {g, std::move(v), GroupClass::PositiveHermitian};
}

Mat2 su2(double theta, int axis) {
  return exp_traceless(std::complex<double>(0, -theta / 2) * pauli(axis));
}

double max_diff(const MatrixField& a, const MatrixField& b) {
  double m = 0.0;
  for (std::size_t s = 0; s < a.size(); ++s) {
    m = std::max(m, (a[s] - b[s]).norm());
  }
  return m;
}

} // namespace

TEST(Lattice, GridValidation) {
  EXPECT_THROW(LatticeGrid(6), DomainError);
  EXPECT_THROW(LatticeGrid(9), DomainError);
  const LatticeGrid g(8, 10);
  EXPECT_EQ(g.size(), 80u);
  EXPECT_EQ(g.site(-1, 0), g.site(7, 0));
  EXPECT_EQ(g.site(0, 10), g.site(0, 0));
}

TEST(Lattice, GroupFieldValidation) {
  const LatticeGrid g(8);
  MatrixField bad(g.size(), Mat2::Identity() * 2.0);
  EXPECT_THROW(LatticeGroupField(g, bad, GroupClass::SL2C), DomainError);
  EXPECT_THROW(LatticeGroupField(g, MatrixField(3, Mat2::Identity()), GroupClass::SL2C),
               DomainError);
  Mat2 shear = Mat2::Identity();
  shear(0, 1) = 1.0;
  EXPECT_NO_THROW(LatticeGroupField(g, MatrixField(g.size(), shear), GroupClass::SL2C));
  EXPECT_THROW(LatticeGroupField(g, MatrixField(g.size(), shear), GroupClass::SU2), DomainError);
  EXPECT_THROW(LatticeGroupField(g, MatrixField(g.size(), shear), GroupClass::PositiveHermitian),
               DomainError);
}

TEST(Lattice, ExpLogRoundTrip) {
  const LatticeGrid g(16);
  const MatrixField x = random_algebra_field(g, GroupClass::SL2C, 0.8, 5);
  for (const Mat2& m : x) {
    EXPECT_LT((log_sl2(exp_traceless(m)) - m).norm(), 1e-12);
  }
  Mat2 small = 1e-7 * pauli(2);
  EXPECT_LT((exp_traceless(small) - (Mat2::Identity() + small)).norm(), 1e-13);
  const Components c = components(pauli(1) * std::complex<double>(0, 1));
  EXPECT_LT((from_components(c) - pauli(1) * std::complex<double>(0, 1)).norm(), 1e-15);
}

TEST(Lattice, LogBranchFailure) {
  const LatticeGrid g(8);
  const Mat2 minus = -Mat2::Identity();
  EXPECT_THROW(log_sl2(minus), DomainError);
  const LatticeGroupField h(g, MatrixField(g.size(), minus), GroupClass::SU2);
  try {
    (void)wzw_action(h);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("principal-log"), std::string::npos);
  }
}

TEST(Kernels, SerialAndOmpAgree) {
  const LatticeGrid g(24, 16);
  const auto u = random_field(g, GroupClass::SL2C, 0.5, 11);
  const auto v = random_field(g, GroupClass::SL2C, 0.5, 12);
  namespace ks = kernels::serial;
  namespace ko = kernels::omp;
  const auto ds = ks::derivatives(g, u.values());
  const auto dp = ko::derivatives(g, u.values());
  EXPECT_EQ(max_diff(ds.dz, dp.dz), 0.0);
  EXPECT_EQ(max_diff(ds.dzbar, dp.dzbar), 0.0);
  EXPECT_EQ(max_diff(ks::inverse(u.values()), ko::inverse(u.values())), 0.0);
  EXPECT_EQ(max_diff(ks::product(u.values(), v.values()), ko::product(u.values(), v.values())),
            0.0);
  const auto ls = ks::log_field(u.values());
  EXPECT_LT(max_diff(ls, ko::log_field(u.values())), 1e-15);
  EXPECT_LT(max_diff(ks::exp_field(ls), ko::exp_field(ls)), 1e-15);
  const auto ts = ks::trace_integral(g, ds.dz, dp.dzbar);
  EXPECT_LT(std::abs(ts - ko::trace_integral(g, ds.dz, dp.dzbar)), 1e-12 * (1 + std::abs(ts)));
  for (double s : {0.1, 0.5, 0.9}) {
    const auto ws = ks::wz_slice(g, ls, s);
    EXPECT_LT(std::abs(ws - ko::wz_slice(g, ls, s)), 1e-12 * (1 + std::abs(ws)));
  }
  const auto a = kn_fields(u);
  EXPECT_EQ(ks::flatness_max(g, a.a_zbar, a.a_z), ko::flatness_max(g, a.a_zbar, a.a_z));
}

TEST(RandomField, DeterministicAndSeedDependent) {
  const LatticeGrid g(16);
  const auto a = random_field(g, GroupClass::SU2, 0.3, 1);
  const auto b = random_field(g, GroupClass::SU2, 0.3, 1);
  const auto c = random_field(g, GroupClass::SU2, 0.3, 2);
  EXPECT_EQ(max_diff(a.values(), b.values()), 0.0);
  EXPECT_GT(max_diff(a.values(), c.values()), 1e-3);
}

TEST(RandomField, ClassesAndAmplitude) {
  const LatticeGrid ref(256);
  for (GroupClass cls : {GroupClass::SL2C, GroupClass::PositiveHermitian, GroupClass::SU2}) {
    const auto x = random_algebra_field(ref, cls, 0.7, 4);
    double top = 0.0;
    for (const Mat2& m : x) {
      EXPECT_LT(std::abs(m.trace()), 1e-14);
      if (cls == GroupClass::SU2) {
        EXPECT_LT((m + m.adjoint()).norm(), 1e-14);
      } else if (cls == GroupClass::PositiveHermitian) {
        EXPECT_LT((m - m.adjoint()).norm(), 1e-14);
      }
      top = std::max(top, spectral_norm(m));
    }
    EXPECT_NEAR(top, 0.7, 1e-12);
  }
  // coarser grids sample the same function, so never exceed the amplitude
  const auto coarse = random_algebra_field(LatticeGrid(32), GroupClass::SL2C, 0.7, 4);
  const auto fine = random_algebra_field(ref, GroupClass::SL2C, 0.7, 4);
  for (int j = 0; j < 32; ++j) {
    for (int i = 0; i < 32; ++i) {
      EXPECT_LT((coarse[LatticeGrid(32).site(i, j)] - fine[ref.site(8 * i, 8 * j)]).norm(), 1e-13);
    }
  }
  EXPECT_THROW(random_field(LatticeGrid(8), GroupClass::SU2, 0.0, 1), DomainError);
  EXPECT_THROW(random_field(LatticeGrid(8), GroupClass::SU2, 1.5, 1), DomainError);
}

TEST(GaugeFields, ConstantIsFlatAndZero) {
  const LatticeGrid g(8);
  const auto u = constant_field(g, su2(0.7, 2), GroupClass::SU2);
  const auto a = kn_fields(u);
  for (const Mat2& m : a.a_zbar) {
    EXPECT_LT(m.norm(), 1e-15);
  }
  EXPECT_EQ(flatness_residual(a), 0.0);
}

TEST(GaugeFields, AbelianMatchesAnalyticDerivative) {
  const LatticeGrid g(64);
  const double amp = 0.4;
  const auto a = kn_fields(abelian_field(g, amp));
  // a_zbar = -d_zbar f sigma_3 up to the central-difference error of exp(f)
  double err = 0.0;
  for (int i = 0; i < g.nx(); ++i) {
    const double df = -2 * kPi * amp * std::sin(2 * kPi * g.x(i));
    const Mat2 expect = -0.5 * df * pauli(3);
    err = std::max(err, (a.a_zbar[g.site(i, 3)] - expect).norm());
  }
  EXPECT_LT(err, 5e-3);
  // commuting field: residual is pure discretization of mixed partials
  EXPECT_LT(flatness_residual(a), 1e-12);
}

// d(U U^dagger) = 0 only holds to O(h^2) on the lattice
TEST(GaugeFields, PhysicalApproachesKnForUnitary) {
  double prev = 0.0;
  for (int n : {32, 64}) {
    const auto u = random_field(LatticeGrid(n), GroupClass::SU2, 0.5, 8);
    const double d = max_diff(kn_fields(u).a_z, physical_fields(u).a_z);
    if (prev > 0) {
      EXPECT_GT(prev / d, kMinRatio);
      EXPECT_LT(prev / d, kMaxRatio);
    }
    prev = d;
  }
}

TEST(GaugeFields, FlatnessConvergesAtSecondOrder) {
  for (std::uint64_t seed : {1, 2}) {
    const double r32 = flatness_residual(kn_fields(random_field(LatticeGrid(32), GroupClass::SL2C, 0.3, seed)));
    const double r64 = flatness_residual(kn_fields(random_field(LatticeGrid(64), GroupClass::SL2C, 0.3, seed)));
    EXPECT_GT(r32 / r64, kMinRatio);
    EXPECT_LT(r32 / r64, kMaxRatio);
  }
}

TEST(GaugeFields, MismatchedGrids) {
  const auto a = random_field(LatticeGrid(8), GroupClass::SU2, 0.3, 1);
  const auto b = random_field(LatticeGrid(16), GroupClass::SU2, 0.3, 1);
  EXPECT_THROW(multiply(a, b), DomainError);
  EXPECT_THROW(pw_defect(a, b), DomainError);
}

TEST(Action, IdentityAndConstantVanish) {
  const LatticeGrid g(8);
  EXPECT_EQ(std::abs(wzw_action(identity_field(g)).value), 0.0);
  const auto c = wzw_action(constant_field(g, su2(1.1, 1), GroupClass::SU2));
  EXPECT_LT(std::abs(c.value), 1e-15);
  EXPECT_EQ(c.wz_branch, 0);
}

TEST(Action, AbelianScalarOracle) {
  const double amp = 0.5;
  const double exact = -kPi * amp * amp / 2;
  double prev = 0.0;
  for (int n : {32, 64}) {
    const auto s = wzw_action(abelian_field(LatticeGrid(n), amp));
    EXPECT_LT(std::abs(s.wess_zumino), 1e-14);
    EXPECT_LT(std::abs(s.value.imag()), 1e-14);
    const double err = std::abs(s.value.real() - exact);
    EXPECT_LT(err / std::abs(exact), 2e-2) << n;
    if (prev > 0) {
      EXPECT_NEAR(prev / err, 4.0, 0.3);
    }
    prev = err;
  }
}

TEST(Action, ConjugationInvariant) {
  const LatticeGrid g(32);
  const auto h = random_field(g, GroupClass::SL2C, 0.5, 21);
  const Mat2 v = su2(0.9, 1) * su2(0.4, 3);
  MatrixField conj(g.size());
  for (std::size_t s = 0; s < g.size(); ++s) {
    conj[s] = v * h[s] * v.adjoint();
  }
  const auto a = wzw_action(h).value;
  const auto b = wzw_action(LatticeGroupField(g, conj, GroupClass::SL2C)).value;
  EXPECT_LT(std::abs(a - b), 1e-10);
}

TEST(Action, ConeQuadratureConverged) {
  const auto h = random_field(LatticeGrid(32), GroupClass::SL2C, 0.5, 3);
  EXPECT_LT(std::abs(wzw_action(h, 16).value - wzw_action(h, 32).value), 1e-8);
  EXPECT_THROW(wzw_action(h, 8), DomainError);
}

TEST(Action, PolyakovWiegmann) {
  // commuting pair: the identity is exact in the continuum, so the defect is
  // pure discretization error
  const double c32 = pw_defect(abelian_field(LatticeGrid(32), 0.3), abelian_field(LatticeGrid(32), -0.2));
  const double c64 = pw_defect(abelian_field(LatticeGrid(64), 0.3), abelian_field(LatticeGrid(64), -0.2));
  EXPECT_NEAR(c32 / c64, 4.0, 0.3);
  const LatticeGrid g(32);
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto a = random_field(g, GroupClass::SL2C, 0.3, seed);
    const auto b = random_field(g, GroupClass::SL2C, 0.3, seed + 100);
    const double scale = std::max({1.0, std::abs(wzw_action(a).value),
                                   std::abs(wzw_action(b).value)});
    EXPECT_LT(pw_defect(a, b) / scale, 1e-3);
  }
}

TEST(Action, GaussVariationScalesQuadratically) {
  const LatticeGrid g(32);
  const auto u = random_field(g, GroupClass::SU2, 0.3, 5);
  const MatrixField x = random_algebra_field(g, GroupClass::SL2C, 1.0, 6);
  auto scaled = [&](double eta) {
    MatrixField e = x;
    for (auto& m : e) {
      m *= eta;
    }
    return e;
  };
  const double r1 = gauss_variation_check(u, scaled(1e-3), 2);
  const double r2 = gauss_variation_check(u, scaled(5e-4), 2);
  EXPECT_NEAR(r1 / r2, 4.0, 1.0);
  EXPECT_LT(r1, 1e-3);
}

TEST(Kahler, RealAndVanishing) {
  const LatticeGrid g(16);
  const auto a = physical_fields(random_field(g, GroupClass::SL2C, 0.5, 1));
  const auto at = physical_fields(random_field(g, GroupClass::SL2C, 0.5, 2));
  const TheoryLevel cs(Theory::CS, 3);
  const TheoryLevel tm(Theory::TMYM, 3, 1.0);
  EXPECT_LT(std::abs(kahler_potential(a, at, cs).imag()), 1e-10);
  EXPECT_LT(std::abs(kahler_potential(a, at, tm).imag()), 1e-10);
  // the CS potential is a positive norm
  EXPECT_GT(kahler_potential(a, at, cs).real(), 0.0);
  const auto zero = kn_fields(identity_field(g));
  EXPECT_EQ(std::abs(kahler_potential(zero, zero, cs)), 0.0);
  EXPECT_EQ(std::abs(kahler_potential(zero, zero, tm)), 0.0);
  EXPECT_THROW(kahler_potential(a, at, TheoryLevel(Theory::YM, 3, 1.0)), DomainError);
}

TEST(Symplectic, IdentitiesHold) {
  const LatticeGrid g(16);
  const TheoryLevel cs(Theory::CS, 2);
  const TheoryLevel tm(Theory::TMYM, 2, 1.0);
  const TheoryLevel ym(Theory::YM, 2, 1.0);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto v = random_variation(g, 2 * seed);
    const auto w = random_variation(g, 2 * seed + 1);
    for (const auto& t : {cs, tm, ym}) {
      const auto vw = symplectic_pairing(t, v, w);
      const auto wv = symplectic_pairing(t, w, v);
      EXPECT_LT(std::abs(vw.value + wv.value), 1e-10 * (1 + std::abs(vw.value)));
      EXPECT_LT(std::abs(symplectic_pairing(t, v, v).value), 1e-10);
      if (vw.alternate) {
        EXPECT_LT(std::abs(*vw.alternate - vw.value), 1e-10 * (1 + std::abs(vw.value)));
      }
    }
    EXPECT_TRUE(symplectic_pairing(tm, v, w).alternate.has_value());
    EXPECT_TRUE(symplectic_pairing(ym, v, w).alternate.has_value());
  }
}

TEST(Suites, ConstantFixtureIsExact) {
  SuiteConfig c;
  c.grid = 8;
  c.constant_fixture = true;
  for (Suite s : {Suite::flatness, Suite::pw}) {
    const auto rep = run_suite(s, c);
    EXPECT_TRUE(rep.converged);
    for (const auto& r : rep.residuals) {
      EXPECT_EQ(r.coarse, 0.0) << r.quantity;
    }
  }
}

TEST(Suites, ParseNames) {
  EXPECT_EQ(parse_suite("gauss"), Suite::gauss);
  EXPECT_EQ(to_string(Suite::symplectic), "symplectic");
  EXPECT_THROW(parse_suite("curvature"), ParseError);
}
