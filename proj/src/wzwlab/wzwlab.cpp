#include "cssplit/wzwlab.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <numbers>
#include <random>
#include <utility>

#include "cssplit/error.hpp"
#include "cssplit/kernels.hpp"
#include "site_ops.hpp"

namespace cssplit {

namespace k = kernels::omp;
using kernels::detail::pairwise_sum;
using cd = std::complex<double>;

namespace {

constexpr cd kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;
constexpr int kReferenceGrid = 256;

void require_same_grid(const LatticeGrid& a, const LatticeGrid& b) {
  if (!(a == b)) {
    throw DomainError("fields live on mismatched grids");
  }
}

// Low Fourier modes of the random fields, (n_x, n_y).
constexpr std::array<std::pair<int, int>, 5> kModes{
    {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, -1}}};

struct ModeCoefficients {
  // [component][mode] -> (cos, sin) coefficients
  std::array<std::array<std::pair<cd, cd>, kModes.size()>, 3> c{};
  Mat2 basis[3];
};

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

ModeCoefficients draw_modes(GroupClass cls, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&]() -> cd {
    const double re = 2.0 * unit_uniform(rng) - 1.0;
    if (cls != GroupClass::SL2C) {
      return re;
    }
    return {re, 2.0 * unit_uniform(rng) - 1.0};
  };
  ModeCoefficients m;
  for (int a = 0; a < 3; ++a) {
    m.basis[a] = cls == GroupClass::SU2 ? Mat2(kI * pauli(a + 1)) : pauli(a + 1);
    for (std::size_t n = 0; n < kModes.size(); ++n) {
      const cd cos_coeff = draw();
      const cd sin_coeff = n == 0 ? cd{} : draw();
      m.c[a][n] = {cos_coeff, sin_coeff};
    }
  }
  return m;
}

Mat2 evaluate_modes(const ModeCoefficients& m, double x, double y) {
  Mat2 out = Mat2::Zero();
  for (int a = 0; a < 3; ++a) {
    cd v{};
    for (std::size_t n = 0; n < kModes.size(); ++n) {
      const double theta = 2.0 * kPi * (kModes[n].first * x + kModes[n].second * y);
      v += m.c[a][n].first * std::cos(theta) + m.c[a][n].second * std::sin(theta);
    }
    out += v * m.basis[a];
  }
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Independent stream number `stream` derived from a user seed.
std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream));
}

// Gauss-Legendre nodes and weights on [0, 1].
std::vector<std::pair<double, double>> gauss_legendre(int n) {
  std::vector<std::pair<double, double>> rule(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        break;
      }
    }
    // recompute the derivative at the converged node
    double p0 = 1.0;
    double p1 = x;
    for (int j = 2; j <= n; ++j) {
      const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule[i] = {0.5 * (1.0 - x), 0.5 * w};
  }
  return rule;
}

} // namespace

MatrixField random_algebra_field(const LatticeGrid& grid, GroupClass cls,
                                 double amplitude, std::uint64_t seed) {
  if (!(amplitude > 0.0 && amplitude <= 1.0)) {
    throw DomainError("amplitude must lie in (0, 1]");
  }
  const ModeCoefficients modes = draw_modes(cls, seed);
  double peak = 0.0;
  for (int j = 0; j < kReferenceGrid; ++j) {
    for (int i = 0; i < kReferenceGrid; ++i) {
      peak = std::max(peak, spectral_norm(evaluate_modes(
                                modes, static_cast<double>(i) / kReferenceGrid,
                                static_cast<double>(j) / kReferenceGrid)));
    }
  }
  const double scale = amplitude / peak;
  MatrixField out(grid.size());
  for (int j = 0; j < grid.ny(); ++j) {
    for (int i = 0; i < grid.nx(); ++i) {
      out[grid.site(i, j)] = scale * evaluate_modes(modes, grid.x(i), grid.y(j));
    }
  }
  return out;
}

LatticeGroupField random_field(const LatticeGrid& grid, GroupClass cls,
                               double amplitude, std::uint64_t seed) {
  return {grid, k::exp_field(random_algebra_field(grid, cls, amplitude, seed)),
          cls};
}

LatticeGroupField constant_field(const LatticeGrid& grid, const Mat2& value,
                                 GroupClass cls) {
  return {grid, MatrixField(grid.size(), value), cls};
}

LatticeGroupField identity_field(const LatticeGrid& grid) {
  return constant_field(grid, Mat2::Identity(), GroupClass::SU2);
}

LatticeGroupField multiply(const LatticeGroupField& a,
                           const LatticeGroupField& b) {
  require_same_grid(a.grid(), b.grid());
  const GroupClass cls =
      a.group_class() == GroupClass::SU2 && b.group_class() == GroupClass::SU2
          ? GroupClass::SU2
          : GroupClass::SL2C;
  return {a.grid(), k::product(a.values(), b.values()), cls};
}

LatticeGaugeField kn_fields(const LatticeGroupField& u) {
  const auto d = k::derivatives(u.grid(), u.values());
  const MatrixField uinv = k::inverse(u.values());
  LatticeGaugeField out{u.grid(), k::product(d.dzbar, uinv),
                        k::product(d.dz, uinv)};
  for (std::size_t s = 0; s < out.a_zbar.size(); ++s) {
    out.a_zbar[s] = -out.a_zbar[s];
    out.a_z[s] = -out.a_z[s];
  }
  return out;
}

LatticeGaugeField physical_fields(const LatticeGroupField& u) {
  LatticeGaugeField out = kn_fields(u);
  for (std::size_t s = 0; s < out.a_z.size(); ++s) {
    out.a_z[s] = -out.a_zbar[s].adjoint();
  }
  return out;
}

double flatness_residual(const LatticeGaugeField& a) {
  if (a.a_zbar.size() != a.grid.size() || a.a_z.size() != a.grid.size()) {
    throw DomainError("gauge field components do not match the grid");
  }
  return k::flatness_max(a.grid, a.a_zbar, a.a_z);
}

ActionValue wzw_action(const LatticeGroupField& h, int s_points) {
  if (s_points < 16) {
    throw DomainError("cone quadrature needs at least 16 points");
  }
  const LatticeGrid& g = h.grid();
  const MatrixField log_h = k::log_field(h.values());
  const auto dh = k::derivatives(g, h.values());
  const auto dhinv = k::derivatives(g, k::inverse(h.values()));
  ActionValue out;
  out.kinetic = k::trace_integral(g, dh.dz, dhinv.dzbar) / (2.0 * kPi);
  cd wz{};
  for (const auto& [s, w] : gauss_legendre(s_points)) {
    wz += w * k::wz_slice(g, log_h, s);
  }
  // (i/12pi) * 3 Tr(R_s [R_x, R_y]) with R_s = log H on the cone
  out.wess_zumino = kI / (4.0 * kPi) * wz;
  out.value = out.kinetic + out.wess_zumino;
  return out;
}

cd pw_cross_term(const LatticeGroupField& a, const LatticeGroupField& b) {
  require_same_grid(a.grid(), b.grid());
  const LatticeGrid& g = a.grid();
  const auto da = k::derivatives(g, a.values());
  const auto db = k::derivatives(g, b.values());
  const MatrixField left = k::product(k::inverse(a.values()), da.dz);
  const MatrixField right = k::product(db.dzbar, k::inverse(b.values()));
  return -k::trace_integral(g, left, right) / kPi;
}

double pw_defect(const LatticeGroupField& a, const LatticeGroupField& b) {
  require_same_grid(a.grid(), b.grid());
  const cd sab = wzw_action(multiply(a, b)).value;
  return std::abs(sab - wzw_action(a).value - wzw_action(b).value -
                  pw_cross_term(a, b));
}

double gauss_variation_check(const LatticeGroupField& u, const MatrixField& eps,
                             int level) {
  const LatticeGrid& g = u.grid();
  if (eps.size() != g.size()) {
    throw DomainError("gauge parameter does not match the grid");
  }
  const LatticeGroupField shifted(g, k::product(k::exp_field(eps), u.values()),
                                  GroupClass::SL2C);
  const cd delta = static_cast<double>(level) *
                   (wzw_action(shifted).value - wzw_action(u).value);
  const LatticeGaugeField a = kn_fields(u);
  const auto da = k::derivatives(g, a.a_zbar);
  // eps^a X^a = -2 Tr(eps X)
  const cd linear =
      level / (2.0 * kPi) * -2.0 * k::trace_integral(g, eps, da.dz);
  return std::abs(delta - linear);
}

cd kahler_potential(const LatticeGaugeField& a, const LatticeGaugeField& a_tilde,
                    const TheoryLevel& theory) {
  require_same_grid(a.grid, a_tilde.grid);
  const LatticeGrid& g = a.grid;
  const double kk = theory.k();
  switch (theory.theory()) {
  case Theory::CS:
    return kk / (2.0 * kPi) * -2.0 * k::trace_integral(g, a.a_zbar, a.a_z);
  case Theory::TMYM:
    return kk / (4.0 * kPi) * -2.0 *
           (k::trace_integral(g, a_tilde.a_zbar, a.a_z) +
            k::trace_integral(g, a.a_zbar, a_tilde.a_z));
  case Theory::YM:
    break;
  }
  throw DomainError("no Kahler potential is defined for YM");
}

FieldVariation random_variation(const LatticeGrid& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto field = [&] {
    AlgebraField f(grid.size());
    for (auto& c : f) {
      for (int a = 0; a < 3; ++a) {
        c[a] = 2.0 * unit_uniform(rng) - 1.0;
      }
    }
    return f;
  };
  FieldVariation v{grid, {}, {}, {}, {}};
  v.a1 = field();
  v.a2 = field();
  v.p1 = field();
  v.p2 = field();
  return v;
}

namespace {

// Holomorphic and antiholomorphic components of a real-frame pair.
struct ZPair {
  Components z;
  Components zbar;
};

ZPair zpair(const Components& c1, const Components& c2) {
  return {0.5 * (c1 + kI * c2), 0.5 * (c1 - kI * c2)};
}

cd dot(const Components& a, const Components& b) {
  return (a.array() * b.array()).sum();
}

// X_zbar(v) Y_z(w) - X_zbar(w) Y_z(v)
cd wedge(const ZPair& xv, const ZPair& yv, const ZPair& xw, const ZPair& yw) {
  return dot(xv.zbar, yw.z) - dot(xw.zbar, yv.z);
}

} // namespace

SymplecticValue symplectic_pairing(const TheoryLevel& theory,
                                   const FieldVariation& v,
                                   const FieldVariation& w) {
  require_same_grid(v.grid, w.grid);
  const LatticeGrid& g = v.grid;
  const std::size_t n = g.size();
  for (const FieldVariation* f : {&v, &w}) {
    if (f->a1.size() != n || f->a2.size() != n || f->p1.size() != n ||
        f->p2.size() != n) {
      throw DomainError("variation components do not match the grid");
    }
  }
  const double kk = theory.k();
  std::vector<cd> primary(n);
  std::vector<cd> alternate(n);
  for (std::size_t s = 0; s < n; ++s) {
    const ZPair av = zpair(v.a1[s], v.a2[s]);
    const ZPair aw = zpair(w.a1[s], w.a2[s]);
    const ZPair pv = zpair(v.p1[s], v.p2[s]);
    const ZPair pw = zpair(w.p1[s], w.p2[s]);
    switch (theory.theory()) {
    case Theory::CS:
      primary[s] = wedge(av, av, aw, aw);
      break;
    case Theory::TMYM: {
      primary[s] = wedge(pv, av, pw, aw) + wedge(av, pv, aw, pw);
      // B = (A_1 + i At_2)/2, C = (At_1 + i A_2)/2
      const ZPair bv = zpair(v.a1[s], v.p2[s]);
      const ZPair bw = zpair(w.a1[s], w.p2[s]);
      const ZPair cv = zpair(v.p1[s], v.a2[s]);
      const ZPair cw = zpair(w.p1[s], w.a2[s]);
      alternate[s] = wedge(bv, bv, bw, bw) + wedge(cv, cv, cw, cw);
      break;
    }
    case Theory::YM: {
      primary[s] = wedge(pv, av, pw, aw) + wedge(av, pv, aw, pw);
      // At = A + E, Ah = A - E
      const ZPair tv = zpair(v.a1[s] + v.p1[s], v.a2[s] + v.p2[s]);
      const ZPair tw = zpair(w.a1[s] + w.p1[s], w.a2[s] + w.p2[s]);
      const ZPair hv = zpair(v.a1[s] - v.p1[s], v.a2[s] - v.p2[s]);
      const ZPair hw = zpair(w.a1[s] - w.p1[s], w.a2[s] - w.p2[s]);
      alternate[s] = wedge(tv, av, tw, aw) - wedge(av, hv, aw, hw);
      break;
    }
    }
  }
  const double area = g.cell_area();
  if (theory.theory() == Theory::CS) {
    return {kI * kk / (2.0 * kPi) * pairwise_sum(primary) * area, std::nullopt};
  }
  const cd pref = kI * kk / (4.0 * kPi) * area;
  return {pref * pairwise_sum(primary), pref * pairwise_sum(alternate)};
}

// Suites ---------------------------------------------------------------------

std::string to_string(Suite s) {
  switch (s) {
  case Suite::flatness: return "flatness";
  case Suite::pw: return "pw";
  case Suite::gauss: return "gauss";
  case Suite::symplectic: return "symplectic";
  case Suite::all: return "all";
  }
  return "?";
}

Suite parse_suite(std::string_view text) {
  for (Suite s : {Suite::flatness, Suite::pw, Suite::gauss, Suite::symplectic,
                  Suite::all}) {
    if (text == to_string(s)) {
      return s;
    }
  }
  throw ParseError("unknown suite '" + std::string(text) +
                   "' (expected flatness, pw, gauss, symplectic or all)");
}

namespace {

constexpr double kFlatnessTol = 1e-2;
constexpr double kPwTol = 1e-3;
constexpr double kGaussTol = 1e-3;
constexpr double kSymplecticTol = 1e-10;
constexpr double kGaussEta = 1e-3;

bool ratio_ok(double r) { return r >= kMinRatio && r <= kMaxRatio; }

// Refinement study; a vanishing pair (constant fixtures) has no ratio and
// counts as converged.
Residual refinement(std::string quantity, double coarse, double fine,
                    double tol) {
  Residual r{std::move(quantity), coarse, fine, std::nullopt, tol, false};
  if (coarse == 0.0 && fine == 0.0) {
    r.passed = true;
    return r;
  }
  r.ratio = fine == 0.0 ? std::numeric_limits<double>::infinity() : coarse / fine;
  r.passed = coarse <= tol && ratio_ok(*r.ratio);
  return r;
}

LatticeGroupField suite_field(const LatticeGrid& g, const SuiteConfig& c,
                              std::uint64_t stream) {
  if (c.constant_fixture) {
    // a fixed non-trivial SL(2,C) element
    const Mat2 x = c.amplitude * (0.6 * pauli(1) + kI * 0.3 * pauli(2) +
                                  0.5 * pauli(3));
    return constant_field(g, exp_traceless(x), GroupClass::SL2C);
  }
  return random_field(g, GroupClass::SL2C, c.amplitude,
                      derived_seed(c.seed, stream));
}

double max_norm(const MatrixField& f) {
  double m = 0.0;
  for (const auto& x : f) {
    m = std::max(m, x.norm());
  }
  return m;
}

// Residual relative to the size of the individual terms d_z A_zbar.
double relative_flatness(const LatticeGroupField& u) {
  const LatticeGaugeField a = kn_fields(u);
  const double scale =
      std::max(1.0, max_norm(k::derivatives(a.grid, a.a_zbar).dz));
  return flatness_residual(a) / scale;
}

double relative_pw(const LatticeGroupField& a, const LatticeGroupField& b) {
  const double scale = std::max({1.0, std::abs(wzw_action(a).value),
                                 std::abs(wzw_action(b).value)});
  return pw_defect(a, b) / scale;
}

void flatness_suite(const SuiteConfig& c, VerificationReport& rep) {
  const LatticeGrid coarse(c.grid);
  const LatticeGrid fine(2 * c.grid);
  rep.residuals.push_back(refinement(
      "flatness", relative_flatness(suite_field(coarse, c, 1)),
      relative_flatness(suite_field(fine, c, 1)), c.tol.value_or(kFlatnessTol)));
}

void pw_suite(const SuiteConfig& c, VerificationReport& rep) {
  const LatticeGrid coarse(c.grid);
  const LatticeGrid fine(2 * c.grid);
  rep.residuals.push_back(refinement(
      "pw_defect",
      relative_pw(suite_field(coarse, c, 2), suite_field(coarse, c, 3)),
      relative_pw(suite_field(fine, c, 2), suite_field(fine, c, 3)),
      c.tol.value_or(kPwTol)));
}

void gauss_suite(const SuiteConfig& c, VerificationReport& rep) {
  const LatticeGrid g(c.grid);
  const LatticeGroupField u = suite_field(g, c, 4);
  const std::uint64_t eps_seed = derived_seed(c.seed, 5);
  const double scale =
      std::max(1.0, std::abs(static_cast<double>(c.level) * wzw_action(u).value));
  const double r1 = gauss_variation_check(
      u, random_algebra_field(g, GroupClass::SU2, kGaussEta, eps_seed), c.level);
  const double r2 = gauss_variation_check(
      u, random_algebra_field(g, GroupClass::SU2, kGaussEta / 2, eps_seed),
      c.level);
  Residual r = refinement("gauss_variation", r1 / scale, r2 / scale,
                          c.tol.value_or(kGaussTol));
  rep.residuals.push_back(std::move(r));
}

void symplectic_suite(const SuiteConfig& c, VerificationReport& rep) {
  const LatticeGrid g(c.grid);
  const TheoryLevel cs(Theory::CS, c.level);
  const TheoryLevel tmym(Theory::TMYM, c.level, 1.0);
  const TheoryLevel ym(Theory::YM, c.level, 1.0);
  double split_tmym = 0.0;
  double split_ym = 0.0;
  double antisym = 0.0;
  double bilinear = 0.0;
  constexpr int pairs = 100;
  for (int p = 0; p < pairs; ++p) {
    const FieldVariation v = random_variation(g, derived_seed(c.seed, 100 + 2 * p));
    const FieldVariation w =
        random_variation(g, derived_seed(c.seed, 101 + 2 * p));
    auto rel = [](cd a, cd b) {
      return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
    };
    const auto t = symplectic_pairing(tmym, v, w);
    const auto y = symplectic_pairing(ym, v, w);
    split_tmym = std::max(split_tmym, rel(t.value, *t.alternate));
    split_ym = std::max(split_ym, rel(y.value, *y.alternate));
    for (const TheoryLevel* th : {&cs, &tmym, &ym}) {
      const cd vw = symplectic_pairing(*th, v, w).value;
      const cd wv = symplectic_pairing(*th, w, v).value;
      antisym = std::max(antisym, rel(vw, -wv));
      // Omega(v, 2w + 3v) = 2 Omega(v, w) since Omega(v, v) = 0
      FieldVariation mix = w;
      for (std::size_t s = 0; s < g.size(); ++s) {
        mix.a1[s] = 2.0 * w.a1[s] + 3.0 * v.a1[s];
        mix.a2[s] = 2.0 * w.a2[s] + 3.0 * v.a2[s];
        mix.p1[s] = 2.0 * w.p1[s] + 3.0 * v.p1[s];
        mix.p2[s] = 2.0 * w.p2[s] + 3.0 * v.p2[s];
      }
      bilinear = std::max(
          bilinear, rel(symplectic_pairing(*th, v, mix).value, 2.0 * vw));
    }
  }
  for (auto [name, value] : {std::pair{"tmym_bc_split", split_tmym},
                             std::pair{"ym_difference_form", split_ym},
                             std::pair{"antisymmetry", antisym},
                             std::pair{"bilinearity", bilinear}}) {
    rep.residuals.push_back(Residual{name, value, std::nullopt, std::nullopt,
                                     kSymplecticTol, value <= kSymplecticTol});
  }
}

} // namespace

VerificationReport run_suite(Suite suite, const SuiteConfig& config) {
  (void)LatticeGrid(config.grid); // validates the grid size
  if (!(config.amplitude > 0.0 && config.amplitude <= 1.0)) {
    throw DomainError("amplitude must lie in (0, 1]");
  }
  if (config.level < 1) {
    throw DomainError("level must be at least 1");
  }
  VerificationReport rep;
  rep.suite = to_string(suite);
  rep.grid = config.grid;
  const bool all = suite == Suite::all;
  if (all || suite == Suite::flatness) {
    flatness_suite(config, rep);
  }
  if (all || suite == Suite::pw) {
    pw_suite(config, rep);
  }
  if (all || suite == Suite::gauss) {
    gauss_suite(config, rep);
  }
  if (all || suite == Suite::symplectic) {
    symplectic_suite(config, rep);
  }
  rep.converged = true;
  for (const auto& r : rep.residuals) {
    rep.converged = rep.converged && r.passed;
  }
  return rep;
}

} // namespace cssplit
