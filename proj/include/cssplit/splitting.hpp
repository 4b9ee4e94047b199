#pragma once

// Large-distance splitting of topologically massive (TMYM) and pure (YM)
// Yang-Mills theory into pairs of Chern-Simons theories.
//
//   TMYM at level k  ->  CS_{k/2} x CS_{k/2}     + O(1/m^2)
//   YM   at level k  ->  CS_{k/2} x CS_{-k/2}    + O(1/m^2)
//
// Inner products split for every integer k. Observables map onto CS Wilson
// loops only for even k, where k/2 is an integer level the skein evaluator
// accepts.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cssplit/abelian.hpp"
#include "cssplit/cyclotomic.hpp"
#include "cssplit/linkmodel.hpp"
#include "cssplit/phase.hpp"
#include "cssplit/skein.hpp"

namespace cssplit {

enum class Theory { CS, TMYM, YM };

std::string to_string(Theory t);
Theory parse_theory(std::string_view text);

/// Theory tag with integer level k >= 1 and, for TMYM and YM, the mass m.
class TheoryLevel {
public:
  TheoryLevel(Theory theory, int k, std::optional<double> mass = std::nullopt);

  Theory theory() const noexcept { return theory_; }
  int k() const noexcept { return k_; }
  std::optional<double> mass() const noexcept { return mass_; }

private:
  Theory theory_;
  int k_;
  std::optional<double> mass_;
};

/// Exact rational with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  bool is_integer() const noexcept { return den == 1; }
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return {-a.num, a.den}; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Order of the neglected corrections, O(1/m^p), and optionally the size of
/// the dimensionless small parameter (1/(m L))^p at length scale L.
struct CorrectionOrder {
  int order = 2;
  std::optional<double> bound_coefficient;
};

/// Coefficient 2 c_A + level of S_WZW in one factor; c_A stays symbolic.
struct WzwCoefficient {
  int casimir_multiple = 2;
  Rational level;
  std::string to_string() const;
};

struct InnerProductFactor {
  Theory theory = Theory::CS;
  Rational level;
  WzwCoefficient coefficient;
};

struct InnerProductForm {
  TheoryLevel source;
  std::vector<InnerProductFactor> factors;
  std::optional<CorrectionOrder> correction;
  /// CS input maps to itself.
  bool identity_map = false;
  /// Observables can be written with integer-level CS Wilson loops (k even).
  bool observable_mapping_available = false;

  Rational level_sum() const;
};

/// Factorization of the vacuum inner product.
InnerProductForm split_inner_product(const TheoryLevel& t);

struct WordEntry {
  LoopKind kind = LoopKind::W;
  std::string curve;
  int charge = 1;

  friend bool operator==(const WordEntry&, const WordEntry&) = default;
};

/// Ordered product of loop operators with the antisymmetric matrix of
/// intersection numbers l(C_i, C_j), indexed by entry position.
class LoopOperatorWord {
public:
  LoopOperatorWord(std::vector<WordEntry> entries,
                   std::vector<std::vector<int>> intersections);

  const std::vector<WordEntry>& entries() const noexcept { return entries_; }
  const std::vector<std::vector<int>>& intersections() const noexcept {
    return intersections_;
  }
  std::size_t size() const noexcept { return entries_.size(); }
  int intersection(std::size_t i, std::size_t j) const {
    return intersections_.at(i).at(j);
  }

  /// Entries rearranged so that new position p holds old entry perm[p].
  LoopOperatorWord permuted(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const LoopOperatorWord&,
                         const LoopOperatorWord&) = default;

private:
  std::vector<WordEntry> entries_;
  std::vector<std::vector<int>> intersections_;
};

/// Phase picked up by exchanging the adjacent entries at positions i, i+1:
/// exp(2*pi*i * l(X, Y) n_X n_Y / k) for a W-T pair, 1 for same-kind pairs.
ExactPhase swap_phase(const LoopOperatorWord& word, std::size_t i, int level);

struct ReorderedWord {
  LoopOperatorWord word;
  ExactPhase phase;
};

/// Exchanges the entries at positions i and i+1.
ReorderedWord apply_swap(const LoopOperatorWord& word, std::size_t i,
                         int level);

/// Brings the word to canonical order (all W left of all T, stable within
/// each kind) by adjacent exchanges and accumulates their phases.
ReorderedWord normal_order(const LoopOperatorWord& word, int level);

/// Reorders to an arbitrary target order by adjacent exchanges.
ReorderedWord reorder(const LoopOperatorWord& word,
                      const std::vector<std::size_t>& perm, int level);

struct ProvenanceEntry {
  LoopKind kind;
  std::string curve;
  CSExpectation value;
};

struct SplitExpectation {
  RootOfUnityScalar value;
  std::complex<double> rendered;
  int tmym_level;
  int cs_level;
  Normalization normalization;
  std::vector<ProvenanceEntry> provenance;
  CorrectionOrder correction;
};

/// TMYM expectation value of a product of W and T loops with zero mutual
/// intersection, as the product of CS expectation values at level k/2.
/// `curves` supplies a diagram for every curve id in the word.
SplitExpectation tmym_expectation(
    const LoopOperatorWord& word, const TheoryLevel& t,
    const std::map<std::string, PDCode>& curves,
    Normalization normalization = Normalization::writhe_corrected,
    std::optional<double> length_scale = std::nullopt);

/// Total winding phase, in units of pi, acquired under a large gauge
/// transformation of winding number w.
struct GaugePhase {
  std::int64_t pi_multiple = 0;
  bool invariant = true;
};

/// TMYM: two halves each shift by pi k w, total 2 pi k w.
/// YM: the halves shift by +pi k w and -pi k w and cancel.
/// CS: a full-level CS action shifts by 2 pi k w.
GaugePhase gauge_phase_check(const TheoryLevel& t, std::int64_t winding);

/// A single half-level CS part on its own: pi k w, invariant iff k w is even.
GaugePhase half_level_gauge_phase(int k, std::int64_t winding);

/// Order bookkeeping for the neglected corrections at length scale L:
/// order 2 with small parameter (1/(m L))^2.
CorrectionOrder correction_bound(const TheoryLevel& t, double length_scale);

} // namespace cssplit
