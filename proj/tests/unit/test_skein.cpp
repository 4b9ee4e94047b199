#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cssplit/cyclotomic.hpp"
#include "cssplit/error.hpp"
#include "cssplit/skein.hpp"
#include "oracles.hpp"

using namespace cssplit;
using cssplit::testing::brute_force_bracket;
using cssplit::testing::corpus;

namespace {

std::complex<double> a_value(int k) {
  return std::polar(1.0, std::numbers::pi / (2.0 * (k + 2)));
}

LaurentPolynomial poly(std::initializer_list<std::pair<std::int64_t, int>> terms) {
  LaurentPolynomial p;
  for (auto [c, e] : terms) {
    p += LaurentPolynomial::monomial(c, e);
  }
  return p;
}

} // namespace

TEST(Laurent, ArithmeticAndTrim) {
  const LaurentPolynomial x = poly({{1, 1}, {-1, -1}});
  const LaurentPolynomial sq = x * x;
  EXPECT_EQ(sq, poly({{1, 2}, {-2, 0}, {1, -2}}));
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ(LaurentPolynomial::monomial(-1, 3).pow(-2), LaurentPolynomial::monomial(1, -6));
  EXPECT_EQ(sq.min_exponent(), -2);
  EXPECT_EQ(sq.max_exponent(), 2);
  EXPECT_EQ(sq.coefficient(0), -2);
  EXPECT_EQ(sq.coefficient(7), 0);
}

TEST(Laurent, OverflowIsDetected) {
  const LaurentPolynomial big = LaurentPolynomial::constant(std::int64_t{1} << 62);
  EXPECT_THROW(big * LaurentPolynomial::constant(4), std::overflow_error);
}

TEST(Cyclotomic, KnownPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
  EXPECT_EQ(euler_phi(20), 8);
  EXPECT_EQ(euler_phi(40), 16);
  EXPECT_EQ(cyclotomic_polynomial(20).size(), 9u);
}

TEST(RootOfUnity, OrderIdentityHoldsExactly) {
  for (int k = 1; k <= 8; ++k) {
    const int n = 4 * (k + 2);
    EXPECT_EQ(RootOfUnityScalar::a_power(k, n), RootOfUnityScalar::integer(k, 1)) << k;
    EXPECT_EQ(RootOfUnityScalar::a_power(k, n / 2), RootOfUnityScalar::integer(k, -1)) << k;
    EXPECT_EQ(RootOfUnityScalar::a_power(k, -1) * RootOfUnityScalar::a_power(k, 1),
              RootOfUnityScalar::integer(k, 1));
  }
}

TEST(RootOfUnity, ReductionIsCanonical) {
  // the primitive N-th roots sum to mu(N); for N = 12 (k = 1) this is 0
  RootOfUnityScalar s(1);
  for (int e : {1, 5, 7, 11}) {
    s += RootOfUnityScalar::a_power(1, e);
  }
  EXPECT_TRUE(s.is_zero());
  // d^2 = A^4 + 2 + A^-4 regardless of how it is built
  for (int k = 1; k <= 6; ++k) {
    const auto d = RootOfUnityScalar::from_laurent(loop_value(), k);
    const auto d2 = RootOfUnityScalar::from_laurent(loop_value() * loop_value(), k);
    EXPECT_EQ(d * d, d2);
  }
}

TEST(RootOfUnity, RenderingMatchesValue) {
  for (int k = 1; k <= 8; ++k) {
    for (int e = -30; e <= 30; e += 7) {
      const auto z = RootOfUnityScalar::a_power(k, e).to_complex();
      const auto expect = std::pow(a_value(k), e);
      EXPECT_NEAR(std::abs(z - expect), 0.0, 1e-12);
    }
  }
}

TEST(RootOfUnity, LevelMismatchAndRange) {
  EXPECT_THROW(RootOfUnityScalar(0), DomainError);
  EXPECT_THROW(RootOfUnityScalar::integer(2, 1) + RootOfUnityScalar::integer(3, 1),
               DomainError);
}

TEST(Bracket, UnknotIsLoopValue) {
  const PDCode unknot = braid_closure(BraidWord(1, {}));
  EXPECT_EQ(bracket_polynomial(unknot), loop_value());
  for (int k : {1, 2, 3, 7}) {
    EXPECT_EQ(kauffman_bracket(unknot, k), RootOfUnityScalar::from_laurent(loop_value(), k));
  }
}

TEST(Bracket, TrefoilPolynomial) {
  // <right trefoil> = -A^5 - A^-3 + A^-7 with <O> = d
  const PDCode tref = braid_closure(parse_braid("1 1 1"));
  const LaurentPolynomial expected =
      (poly({{-1, 5}, {-1, -3}, {1, -7}})) * loop_value();
  // the normalized bracket <K>/d is the textbook polynomial
  EXPECT_EQ(bracket_polynomial(tref), expected);
}

TEST(Bracket, MatchesBruteForceOnCorpus) {
  for (const auto& entry : corpus()) {
    const PDCode pd = braid_closure(entry.braid);
    const LaurentPolynomial oracle = brute_force_bracket(pd);
    EXPECT_EQ(bracket_polynomial(pd), oracle) << entry.name;
    EXPECT_EQ(bracket_polynomial_unmerged(pd), oracle) << entry.name;
    for (int k : {1, 2, 3, 5}) {
      EXPECT_EQ(kauffman_bracket(pd, k), RootOfUnityScalar::from_laurent(oracle, k))
          << entry.name << " k=" << k;
    }
  }
  const PDCode fig8 = cssplit::testing::figure_eight_pd();
  EXPECT_EQ(bracket_polynomial(fig8), brute_force_bracket(fig8));
}

TEST(Bracket, NumericRecursionMatchesExact) {
  for (const auto& entry : corpus()) {
    const PDCode pd = braid_closure(entry.braid);
    for (int k : {1, 2, 3, 5, 8}) {
      const auto exact = kauffman_bracket(pd, k).to_complex();
      EXPECT_LT(std::abs(bracket_numeric(pd, k) - exact), 1e-10) << entry.name;
    }
  }
}

TEST(Bracket, RejectsLevelZero) {
  EXPECT_THROW(kauffman_bracket(braid_closure(parse_braid("1 1 1")), 0), DomainError);
  EXPECT_THROW(cs_expectation(braid_closure(parse_braid("1 1 1")), 0), DomainError);
  EXPECT_THROW(quantum_dimension(0), DomainError);
}

TEST(CSExpectation, UnknotModulusAtLevelTwo) {
  const auto e = cs_expectation(braid_closure(BraidWord(1, {})), 2);
  EXPECT_NEAR(std::abs(e.rendered), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(e.rendered.real(), -std::sqrt(2.0), 1e-12);
  EXPECT_EQ(e.level, 2);
  EXPECT_EQ(e.normalization, Normalization::writhe_corrected);
}

TEST(CSExpectation, TrefoilMatchesJones) {
  // writhe-corrected value / d is V(t) = t + t^3 - t^4 at t = A^-4
  const PDCode tref = braid_closure(parse_braid("1 1 1"));
  for (int k = 1; k <= 8; ++k) {
    const auto a = a_value(k);
    const auto t = std::pow(a, -4);
    const auto d = -a * a - 1.0 / (a * a);
    const auto v = t + std::pow(t, 3) - std::pow(t, 4);
    EXPECT_LT(std::abs(cs_expectation(tref, k).rendered - v * d), 1e-12) << k;
  }
}

TEST(CSExpectation, InvariantUnderKinks) {
  for (const auto& entry : corpus()) {
    const PDCode pd = braid_closure(entry.braid);
    if (pd.crossing_count() == 0) {
      continue;
    }
    const int arc = pd.components()[0][0];
    for (bool positive : {true, false}) {
      const PDCode kinked = cssplit::testing::insert_kink(pd, arc, positive);
      for (int k : {1, 3, 4}) {
        EXPECT_EQ(cs_expectation(kinked, k).value, cs_expectation(pd, k).value)
            << entry.name << (positive ? " +" : " -");
      }
      // the raw bracket picks up -A^{+-3}
      const LaurentPolynomial factor =
          LaurentPolynomial::monomial(-1, positive ? 3 : -3);
      EXPECT_EQ(bracket_polynomial(kinked), bracket_polynomial(pd) * factor) << entry.name;
    }
  }
}

TEST(CSExpectation, InvariantUnderBraidMoves) {
  struct Pair {
    const char* a;
    const char* b;
    int strands_a;
    int strands_b;
  };
  const std::vector<Pair> pairs = {
      {"1 1 1", "1 2 -2 1 1", 3, 3},          // R2
      {"1 1 1", "1 -1 1 1 1", 2, 2},          // R2 on the same generator
      {"1 2 1 -2", "2 1 2 -2", 3, 3},         // R3
      {"1 -2 1 -2", "-2 1 -2 1", 3, 3},       // conjugation
      {"1 1 1", "1 1 1 2", 2, 3},             // positive stabilization
      {"1 -2 1 -2", "1 -2 1 -2 -3", 3, 4},    // negative stabilization
  };
  for (const auto& p : pairs) {
    const PDCode a = braid_closure(parse_braid(p.a, p.strands_a));
    const PDCode b = braid_closure(parse_braid(p.b, p.strands_b));
    for (int k : {1, 2, 3, 5}) {
      EXPECT_EQ(cs_expectation(a, k).value, cs_expectation(b, k).value)
          << p.a << " vs " << p.b << " k=" << k;
    }
  }
}

TEST(CSExpectation, SplitUnionMultiplies) {
  const PDCode unknot = braid_closure(BraidWord(1, {}));
  const PDCode two = braid_closure(BraidWord(2, {}));
  const auto d = RootOfUnityScalar::from_laurent(loop_value(), 3);
  EXPECT_EQ(cs_expectation(two, 3).value, d * d);
  EXPECT_EQ(cs_expectation(disjoint_union(unknot, unknot), 3).value, d * d);
  const PDCode tref = braid_closure(parse_braid("1 1 1"));
  const PDCode hopf = braid_closure(parse_braid("1 1"));
  EXPECT_EQ(cs_expectation(disjoint_union(tref, hopf), 4).value,
            cs_expectation(tref, 4).value * cs_expectation(hopf, 4).value);
}

TEST(CSExpectation, BracketNormalizationIsRaw) {
  const PDCode tref = braid_closure(parse_braid("1 1 1"));
  EXPECT_EQ(cs_expectation(tref, 3, Normalization::bracket).value, kauffman_bracket(tref, 3));
  EXPECT_EQ(parse_normalization("bracket"), Normalization::bracket);
  EXPECT_THROW(parse_normalization("framed"), ParseError);
}

TEST(CSExpectation, MirrorConjugates) {
  const auto r = cs_expectation(braid_closure(parse_braid("1 1 1")), 3).rendered;
  const auto l = cs_expectation(braid_closure(parse_braid("-1 -1 -1")), 3).rendered;
  EXPECT_LT(std::abs(r - std::conj(l)), 1e-12);
}

TEST(QuantumDimension, Values) {
  EXPECT_NEAR(quantum_dimension(1), 1.0, 1e-15);
  EXPECT_NEAR(quantum_dimension(2), std::sqrt(2.0), 1e-15);
  double prev = 0.0;
  for (int k = 1; k <= 200; ++k) {
    const double q = quantum_dimension(k);
    EXPECT_GT(q, prev);
    EXPECT_LT(q, 2.0);
    prev = q;
  }
}
