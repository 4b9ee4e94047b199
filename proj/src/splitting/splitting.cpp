#include "cssplit/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cssplit/error.hpp"

namespace cssplit {

std::string to_string(Theory t) {
  switch (t) {
  case Theory::CS: return "CS";
  case Theory::TMYM: return "TMYM";
  case Theory::YM: return "YM";
  }
  return "?";
}

Theory parse_theory(std::string_view text) {
  if (text == "CS" || text == "cs") {
    return Theory::CS;
  }
  if (text == "TMYM" || text == "tmym") {
    return Theory::TMYM;
  }
  if (text == "YM" || text == "ym") {
    return Theory::YM;
  }
  throw ParseError("unknown theory '" + std::string(text) + "'");
}

TheoryLevel::TheoryLevel(Theory theory, int k, std::optional<double> mass)
    : theory_(theory), k_(k), mass_(mass) {
  if (k < 1) {
    throw DomainError("level must be at least 1, got " + std::to_string(k));
  }
  if (theory == Theory::CS && mass) {
    throw DomainError("pure CS theory takes no mass parameter");
  }
  if (theory != Theory::CS) {
    if (!mass) {
      throw DomainError(to_string(theory) + " requires the mass parameter m");
    }
    if (!(*mass > 0.0) || !std::isfinite(*mass)) {
      throw DomainError("mass parameter m must be positive and finite");
    }
  }
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw std::invalid_argument("zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num)
                  : std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::make(a.num * b.den + b.num * a.den, a.den * b.den);
}

std::string WzwCoefficient::to_string() const {
  std::string out = std::to_string(casimir_multiple) + "c_A";
  if (level.num < 0) {
    return out + " - " + Rational{-level.num, level.den}.to_string();
  }
  return out + " + " + level.to_string();
}

Rational InnerProductForm::level_sum() const {
  Rational sum;
  for (const auto& f : factors) {
    sum = sum + f.level;
  }
  return sum;
}

InnerProductForm split_inner_product(const TheoryLevel& t) {
  InnerProductForm form{t, {}, std::nullopt, false, false};
  const int k = t.k();
  auto factor = [](Rational level) {
    return InnerProductFactor{Theory::CS, level, WzwCoefficient{2, level}};
  };
  switch (t.theory()) {
  case Theory::CS:
    form.factors = {factor(Rational::make(k, 1))};
    form.identity_map = true;
    form.observable_mapping_available = true;
    return form;
  case Theory::TMYM:
    form.factors = {factor(Rational::make(k, 2)), factor(Rational::make(k, 2))};
    break;
  case Theory::YM:
    form.factors = {factor(Rational::make(k, 2)), factor(Rational::make(-k, 2))};
    break;
  }
  form.correction = CorrectionOrder{2, std::nullopt};
  form.observable_mapping_available = k % 2 == 0;
  return form;
}

LoopOperatorWord::LoopOperatorWord(std::vector<WordEntry> entries,
                                   std::vector<std::vector<int>> intersections)
    : entries_(std::move(entries)), intersections_(std::move(intersections)) {
  const std::size_t n = entries_.size();
  if (intersections_.size() != n) {
    throw DomainError("intersection matrix must be " + std::to_string(n) +
                      "x" + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (intersections_[i].size() != n) {
      throw DomainError("intersection matrix row " + std::to_string(i) +
                        " has the wrong length");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].charge == 0) {
      throw DomainError("entry " + std::to_string(i) + " has zero charge");
    }
    if (intersections_[i][i] != 0) {
      throw DomainError("intersection matrix diagonal must vanish");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (intersections_[i][j] != -intersections_[j][i]) {
        throw DomainError("intersection matrix must be antisymmetric");
      }
      if (entries_[i].curve == entries_[j].curve) {
        throw DomainError("curve id '" + entries_[i].curve +
                          "' appears twice in the word");
      }
    }
  }
}

LoopOperatorWord
LoopOperatorWord::permuted(const std::vector<std::size_t>& perm) const {
  const std::size_t n = entries_.size();
  std::vector<std::size_t> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) {
      throw DomainError("reordering is not a permutation of the word");
    }
  }
  if (perm.size() != n) {
    throw DomainError("reordering has the wrong length");
  }
  std::vector<WordEntry> entries(n);
  std::vector<std::vector<int>> inter(n, std::vector<int>(n, 0));
  for (std::size_t p = 0; p < n; ++p) {
    entries[p] = entries_[perm[p]];
    for (std::size_t q = 0; q < n; ++q) {
      inter[p][q] = intersections_[perm[p]][perm[q]];
    }
  }
  return {std::move(entries), std::move(inter)};
}

ExactPhase swap_phase(const LoopOperatorWord& word, std::size_t i, int level) {
  if (level < 1) {
    throw DomainError("level must be at least 1, got " + std::to_string(level));
  }
  if (i + 1 >= word.size()) {
    throw DomainError("swap position out of range");
  }
  const auto& x = word.entries()[i];
  const auto& y = word.entries()[i + 1];
  if (x.kind == y.kind) {
    return ExactPhase::identity();
  }
  // T(C1) W(C2) = e^{2 pi i l(C1,C2)/k} W(C2) T(C1); read either way round,
  // moving X past Y costs l(X, Y).
  const std::int64_t turns = checked::mul(
      checked::mul(word.intersection(i, i + 1), x.charge), y.charge);
  return {turns, level};
}

ReorderedWord apply_swap(const LoopOperatorWord& word, std::size_t i,
                         int level) {
  const ExactPhase phase = swap_phase(word, i, level);
  std::vector<std::size_t> perm(word.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::swap(perm[i], perm[i + 1]);
  return {word.permuted(perm), phase};
}

ReorderedWord reorder(const LoopOperatorWord& word,
                      const std::vector<std::size_t>& perm, int level) {
  if (level < 1) {
    throw DomainError("level must be at least 1, got " + std::to_string(level));
  }
  const std::size_t n = word.size();
  // validates perm
  (void)word.permuted(perm);
  std::vector<std::size_t> target_pos(n);
  for (std::size_t p = 0; p < n; ++p) {
    target_pos[perm[p]] = p;
  }
  // bubble sort by target position; `origin` tracks original indices
  std::vector<std::size_t> origin(n);
  std::iota(origin.begin(), origin.end(), std::size_t{0});
  ReorderedWord state{word, ExactPhase::identity()};
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (target_pos[origin[i]] > target_pos[origin[i + 1]]) {
        auto next = apply_swap(state.word, i, level);
        state.word = std::move(next.word);
        state.phase *= next.phase;
        std::swap(origin[i], origin[i + 1]);
        swapped = true;
      }
    }
  }
  return state;
}

ReorderedWord normal_order(const LoopOperatorWord& word, int level) {
  if (level < 1) {
    throw DomainError("level must be at least 1, got " + std::to_string(level));
  }
  std::vector<std::size_t> perm;
  for (LoopKind kind : {LoopKind::W, LoopKind::T}) {
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (word.entries()[i].kind == kind) {
        perm.push_back(i);
      }
    }
  }
  return reorder(word, perm, level);
}

SplitExpectation tmym_expectation(const LoopOperatorWord& word,
                                  const TheoryLevel& t,
                                  const std::map<std::string, PDCode>& curves,
                                  Normalization normalization,
                                  std::optional<double> length_scale) {
  if (t.theory() != Theory::TMYM) {
    throw DomainError("tmym_expectation needs a TMYM theory level");
  }
  if (t.k() % 2 != 0) {
    throw DomainError("even level required for observable splitting (k = " +
                      std::to_string(t.k()) + ")");
  }
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = i + 1; j < word.size(); ++j) {
      if (word.intersection(i, j) != 0) {
        throw DomainError(
            "zero intersection required: loops '" + word.entries()[i].curve +
            "' and '" + word.entries()[j].curve +
            "' intersect; outside the regime where observables split");
      }
    }
  }
  const int cs_level = t.k() / 2;
  SplitExpectation out{RootOfUnityScalar::integer(cs_level, 1),
                       {},
                       t.k(),
                       cs_level,
                       normalization,
                       {},
                       CorrectionOrder{2, std::nullopt}};
  for (const auto& e : word.entries()) {
    if (e.charge != 1 && e.charge != -1) {
      throw DomainError("curve '" + e.curve +
                        "': only the SU(2) fundamental (charge +-1) is "
                        "supported");
    }
    auto it = curves.find(e.curve);
    if (it == curves.end()) {
      throw ParseError("no diagram supplied for curve '" + e.curve + "'");
    }
    CSExpectation factor = cs_expectation(it->second, cs_level, normalization);
    out.value *= factor.value;
    out.provenance.push_back({e.kind, e.curve, std::move(factor)});
  }
  out.rendered = out.value.to_complex();
  if (length_scale) {
    out.correction = correction_bound(t, *length_scale);
  }
  return out;
}

GaugePhase gauge_phase_check(const TheoryLevel& t, std::int64_t winding) {
  const std::int64_t half = checked::mul(t.k(), winding);
  switch (t.theory()) {
  case Theory::TMYM:
  case Theory::CS: {
    const std::int64_t total = checked::mul(2, half);
    return {total, total % 2 == 0};
  }
  case Theory::YM:
    return {checked::add(half, -half), true};
  }
  return {};
}

GaugePhase half_level_gauge_phase(int k, std::int64_t winding) {
  if (k < 1) {
    throw DomainError("level must be at least 1, got " + std::to_string(k));
  }
  const std::int64_t total = checked::mul(k, winding);
  return {total, total % 2 == 0};
}

CorrectionOrder correction_bound(const TheoryLevel& t, double length_scale) {
  if (!t.mass()) {
    throw DomainError("correction bound needs the mass parameter m");
  }
  if (!(length_scale > 0.0)) {
    throw DomainError("length scale must be positive");
  }
  const double small = 1.0 / (*t.mass() * length_scale);
  return {2, small * small};
}

} // namespace cssplit
