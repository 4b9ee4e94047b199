#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "cssplit/error.hpp"
#include "cssplit/skein.hpp"

namespace cssplit {

namespace {

// Each crossing c owns four ends 4c..4c+3 in PD slot order. An arc joins
// two ends; `link` maps every end of an unsmoothed crossing to the end it is
// currently joined to through arcs and already-smoothed crossings.
using EndLinks = std::vector<int>;

template <class W>
struct SkeinWeights {
  W one;
  W a;
  W a_inv;
  W loop;
};

EndLinks initial_links(const PDCode& pd) {
  std::map<int, std::vector<int>> ends_of_arc;
  const auto& xs = pd.crossings();
  for (std::size_t c = 0; c < xs.size(); ++c) {
    for (int s = 0; s < 4; ++s) {
      ends_of_arc[xs[c].arcs[s]].push_back(static_cast<int>(4 * c + s));
    }
  }
  EndLinks link(4 * xs.size(), -1);
  for (const auto& [arc, ends] : ends_of_arc) {
    link[ends[0]] = ends[1];
    link[ends[1]] = ends[0];
  }
  return link;
}

// Greedy order keeping the boundary between smoothed and unsmoothed
// crossings short.
std::vector<int> crossing_order(const EndLinks& link, std::size_t n) {
  std::vector<int> order;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    int best = -1;
    int best_score = -1;
    for (std::size_t c = 0; c < n; ++c) {
      if (done[c]) {
        continue;
      }
      int score = 0;
      for (int s = 0; s < 4; ++s) {
        if (done[link[4 * c + s] / 4]) {
          ++score;
        }
      }
      if (score > best_score) {
        best = static_cast<int>(c);
        best_score = score;
      }
    }
    done[best] = true;
    order.push_back(best);
  }
  return order;
}

// Smooths crossing c in place and returns the number of loops closed.
// The A-smoothing joins slots (0,1) and (2,3); the B-smoothing joins
// (0,3) and (1,2).
int smooth(EndLinks& link, int c, bool a_smoothing) {
  const int base = 4 * c;
  const int pairs[2][2] = {{0, a_smoothing ? 1 : 3}, {2, a_smoothing ? 3 : 1}};
  int loops = 0;
  for (const auto& pr : pairs) {
    const int p = base + pr[0];
    const int q = base + pr[1];
    const int x = link[p];
    const int y = link[q];
    if (x == q) {
      ++loops;
    } else {
      link[x] = y;
      link[y] = x;
    }
    link[p] = -1;
    link[q] = -1;
  }
  return loops;
}

template <class W>
W times_loops(W value, const W& loop, int loops) {
  for (int i = 0; i < loops; ++i) {
    value = value * loop;
  }
  return value;
}

template <class W>
W merged_state_sum(const PDCode& pd, const SkeinWeights<W>& w) {
  EndLinks start = initial_links(pd);
  const auto order = crossing_order(start, pd.crossing_count());
  std::map<EndLinks, W> states;
  states.emplace(std::move(start), w.one);
  for (int c : order) {
    std::map<EndLinks, W> next;
    for (const auto& [link, weight] : states) {
      for (bool a_smoothing : {true, false}) {
        EndLinks smoothed = link;
        const int loops = smooth(smoothed, c, a_smoothing);
        W term = times_loops(weight * (a_smoothing ? w.a : w.a_inv), w.loop,
                             loops);
        auto [it, inserted] = next.emplace(std::move(smoothed), term);
        if (!inserted) {
          it->second = it->second + term;
        }
      }
    }
    states = std::move(next);
  }
  // every end is smoothed: a single state remains
  return times_loops(states.begin()->second, w.loop,
                     pd.crossingless_components());
}

template <class W>
W unmerged_branch(EndLinks& link, const std::vector<int>& order,
                  std::size_t depth, const SkeinWeights<W>& w) {
  if (depth == order.size()) {
    return w.one;
  }
  W total{};
  bool first = true;
  for (bool a_smoothing : {true, false}) {
    EndLinks branch = link;
    const int loops = smooth(branch, order[depth], a_smoothing);
    W term = times_loops(
        (a_smoothing ? w.a : w.a_inv) * unmerged_branch(branch, order, depth + 1, w),
        w.loop, loops);
    total = first ? term : total + term;
    first = false;
  }
  return total;
}

SkeinWeights<LaurentPolynomial> exact_weights() {
  return {LaurentPolynomial::constant(1), LaurentPolynomial::monomial(1, 1),
          LaurentPolynomial::monomial(1, -1), loop_value()};
}

void check_level(int level) {
  if (level < 1) {
    throw DomainError("level must be at least 1, got " + std::to_string(level));
  }
}

} // namespace

std::string to_string(Normalization n) {
  return n == Normalization::bracket ? "bracket" : "writhe_corrected";
}

Normalization parse_normalization(std::string_view text) {
  if (text == "bracket") {
    return Normalization::bracket;
  }
  if (text == "writhe_corrected") {
    return Normalization::writhe_corrected;
  }
  throw ParseError("unknown normalization '" + std::string(text) + "'");
}

LaurentPolynomial loop_value() {
  return LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
}

LaurentPolynomial bracket_polynomial(const PDCode& pd) {
  return merged_state_sum(pd, exact_weights());
}

LaurentPolynomial bracket_polynomial_unmerged(const PDCode& pd) {
  EndLinks link = initial_links(pd);
  const auto order = crossing_order(link, pd.crossing_count());
  const auto w = exact_weights();
  return times_loops(unmerged_branch(link, order, 0, w), w.loop,
                     pd.crossingless_components());
}

std::complex<double> bracket_numeric(const PDCode& pd, int level) {
  check_level(level);
  const double angle = std::numbers::pi / (2.0 * (level + 2));
  const std::complex<double> a = std::polar(1.0, angle);
  const std::complex<double> a_inv = std::conj(a);
  return merged_state_sum<std::complex<double>>(
      pd, {1.0, a, a_inv, -a * a - a_inv * a_inv});
}

RootOfUnityScalar kauffman_bracket(const PDCode& pd, int level) {
  check_level(level);
  return RootOfUnityScalar::from_laurent(bracket_polynomial(pd), level);
}

CSExpectation cs_expectation(const PDCode& pd, int level,
                             Normalization normalization) {
  RootOfUnityScalar value = kauffman_bracket(pd, level);
  if (normalization == Normalization::writhe_corrected) {
    const int w = writhe(pd);
    // (-A^3)^{-w} = (-1)^w A^{-3w}
    value *= RootOfUnityScalar::integer(level, w % 2 == 0 ? 1 : -1) *
             RootOfUnityScalar::a_power(level, -3 * w);
  }
  const auto rendered = value.to_complex();
  return {std::move(value), rendered, level, normalization,
          Representation::fundamental};
}

double quantum_dimension(int level) {
  check_level(level);
  return 2.0 * std::cos(std::numbers::pi / (level + 2));
}

} // namespace cssplit
