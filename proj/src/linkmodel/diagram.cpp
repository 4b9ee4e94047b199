#include "cssplit/linkmodel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "cssplit/error.hpp"

namespace cssplit {

BraidWord::BraidWord(int strand_count, std::vector<int> letters)
    : strand_count_(strand_count), letters_(std::move(letters)) {
  if (strand_count_ < 1) {
    throw ParseError("braid strand count must be positive");
  }
  for (int l : letters_) {
    if (l == 0) {
      throw ParseError("braid generator index 0 is not allowed");
    }
    if (std::abs(l) >= strand_count_) {
      throw ParseError("braid generator " + std::to_string(l) +
                       " needs more than " + std::to_string(strand_count_) +
                       " strands");
    }
  }
}

std::vector<int> BraidWord::permutation() const {
  // who[p]: the bottom position whose strand currently sits at position p
  std::vector<int> who(strand_count_);
  std::iota(who.begin(), who.end(), 0);
  for (int l : letters_) {
    const int i = std::abs(l) - 1;
    std::swap(who[i], who[i + 1]);
  }
  std::vector<int> perm(strand_count_);
  for (int p = 0; p < strand_count_; ++p) {
    perm[who[p]] = p;
  }
  return perm;
}

BraidWord parse_braid(std::string_view text, std::optional<int> strand_count) {
  std::vector<int> letters;
  std::size_t pos = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',';
  };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) {
      ++pos;
    }
    if (pos == text.size()) {
      break;
    }
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) {
      ++end;
    }
    std::string_view token = text.substr(pos, end - pos);
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') {
      digits.remove_prefix(1);
    }
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() ||
        digits.empty()) {
      throw ParseError("malformed braid token '" + std::string(token) + "'");
    }
    if (value == 0) {
      throw ParseError("braid generator index 0 is not allowed");
    }
    letters.push_back(value);
    pos = end;
  }
  int inferred = 1;
  for (int l : letters) {
    inferred = std::max(inferred, std::abs(l) + 1);
  }
  return BraidWord(strand_count.value_or(inferred), std::move(letters));
}

PDCode::PDCode(std::vector<Crossing> crossings,
               std::vector<std::vector<int>> components)
    : crossings_(std::move(crossings)), components_(std::move(components)) {
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    if (crossings_[c].sign != 1 && crossings_[c].sign != -1) {
      throw ParseError("crossing " + std::to_string(c) +
                       ": sign must be +1 or -1");
    }
  }
  if (components_.empty() && !crossings_.empty()) {
    throw ParseError("PD code has crossings but no components");
  }

  std::map<int, int> successor;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    const auto& comp = components_[k];
    if (comp.empty()) {
      throw ParseError("component " + std::to_string(k) + " is empty");
    }
    for (std::size_t t = 0; t < comp.size(); ++t) {
      const int arc = comp[t];
      if (!arc_component_.emplace(arc, static_cast<int>(k)).second) {
        throw ParseError("arc " + std::to_string(arc) +
                         " listed in more than one place");
      }
      successor[arc] = comp[(t + 1) % comp.size()];
    }
  }

  std::map<int, int> occurrences;
  std::map<int, int> incoming;
  std::map<int, int> outgoing;
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const auto& x = crossings_[c];
    for (int arc : x.arcs) {
      if (!arc_component_.contains(arc)) {
        throw ParseError("crossing " + std::to_string(c) + ": arc " +
                         std::to_string(arc) + " belongs to no component");
      }
      ++occurrences[arc];
    }
    const auto [a, b, cc, d] = x.arcs;
    // passages through the crossing as (incoming arc, outgoing arc)
    std::array<std::pair<int, int>, 2> passes{
        std::pair{a, cc}, x.sign > 0 ? std::pair{d, b} : std::pair{b, d}};
    // an over-arc that leaves and re-enters the same crossing carries no
    // orientation information; either sign is admissible
    if (b == d && successor.at(b) == b) {
      passes[1] = {b, b};
    }
    for (const auto& [in, out] : passes) {
      if (successor.at(in) != out) {
        throw ParseError("crossing " + std::to_string(c) +
                         ": sign or arc order disagrees with the component "
                         "orientation");
      }
      ++incoming[in];
      ++outgoing[out];
    }
  }

  for (const auto& comp : components_) {
    for (int arc : comp) {
      const int n = occurrences.contains(arc) ? occurrences[arc] : 0;
      if (n == 0 && comp.size() == 1) {
        continue;
      }
      if (n != 2 || incoming[arc] != 1 || outgoing[arc] != 1) {
        throw ParseError("arc " + std::to_string(arc) +
                         " must appear exactly twice, once entering and once "
                         "leaving a crossing");
      }
    }
  }
}

int PDCode::component_of(int arc) const {
  auto it = arc_component_.find(arc);
  if (it == arc_component_.end()) {
    throw ParseError("unknown arc " + std::to_string(arc));
  }
  return it->second;
}

int PDCode::under_component(std::size_t c) const {
  return component_of(crossings_.at(c).arcs[0]);
}

int PDCode::over_component(std::size_t c) const {
  return component_of(crossings_.at(c).arcs[1]);
}

int PDCode::crossingless_components() const {
  std::vector<bool> crossed(components_.size(), false);
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    crossed[under_component(c)] = true;
    crossed[over_component(c)] = true;
  }
  return static_cast<int>(std::count(crossed.begin(), crossed.end(), false));
}

PDCode braid_closure(const BraidWord& b) {
  const int n = b.strand_count();
  const auto& letters = b.letters();
  const int max_ids = n + 2 * static_cast<int>(letters.size());

  std::vector<int> current(n);
  std::iota(current.begin(), current.end(), 0);
  std::vector<int> successor(max_ids, -1);
  std::vector<Crossing> raw;
  raw.reserve(letters.size());
  int next_id = n;

  // Strands run upward. sigma_i: the strand entering at i+1 passes under
  // toward position i (right-handed crossing).
  for (int l : letters) {
    const int i = std::abs(l) - 1;
    const int x = current[i];
    const int y = current[i + 1];
    const int lo = next_id++;
    const int hi = next_id++;
    if (l > 0) {
      raw.push_back({{y, hi, lo, x}, 1});
      successor[y] = lo;
      successor[x] = hi;
    } else {
      raw.push_back({{x, y, hi, lo}, -1});
      successor[x] = hi;
      successor[y] = lo;
    }
    current[i] = lo;
    current[i + 1] = hi;
  }

  // trace closure: the arc leaving the top at p is the arc entering at p
  std::vector<int> rep(max_ids);
  std::iota(rep.begin(), rep.end(), 0);
  for (int p = 0; p < n; ++p) {
    rep[current[p]] = p;
  }
  auto succ = [&](int id) {
    return successor[id] < 0 ? id : rep[successor[id]];
  };

  std::vector<int> label(max_ids, 0);
  std::vector<std::vector<int>> components;
  int next_label = 1;
  for (int p = 0; p < n; ++p) {
    if (label[p] != 0) {
      continue;
    }
    std::vector<int> comp;
    int id = p;
    do {
      label[id] = next_label++;
      comp.push_back(label[id]);
      id = succ(id);
    } while (id != p);
    components.push_back(std::move(comp));
  }

  std::vector<Crossing> crossings;
  crossings.reserve(raw.size());
  for (const auto& x : raw) {
    Crossing out{{}, x.sign};
    for (int s = 0; s < 4; ++s) {
      out.arcs[s] = label[rep[x.arcs[s]]];
    }
    crossings.push_back(out);
  }
  return PDCode(std::move(crossings), std::move(components));
}

int writhe(const PDCode& pd) {
  int w = 0;
  for (const auto& x : pd.crossings()) {
    w += x.sign;
  }
  return w;
}

int component_writhe(const PDCode& pd, int i) {
  if (i < 0 || i >= static_cast<int>(pd.component_count())) {
    throw DomainError("component index out of range");
  }
  int w = 0;
  for (std::size_t c = 0; c < pd.crossing_count(); ++c) {
    if (pd.under_component(c) == i && pd.over_component(c) == i) {
      w += pd.crossings()[c].sign;
    }
  }
  return w;
}

int linking_number(const PDCode& pd, int i, int j) {
  const int count = static_cast<int>(pd.component_count());
  if (i < 0 || j < 0 || i >= count || j >= count) {
    throw DomainError("component index out of range");
  }
  if (i == j) {
    throw DomainError("self-linking requires framing");
  }
  int total = 0;
  for (std::size_t c = 0; c < pd.crossing_count(); ++c) {
    const int u = pd.under_component(c);
    const int o = pd.over_component(c);
    if ((u == i && o == j) || (u == j && o == i)) {
      total += pd.crossings()[c].sign;
    }
  }
  // an even count is guaranteed for closed components
  return total / 2;
}

PDCode reverse_component(const PDCode& pd, int i) {
  if (i < 0 || i >= static_cast<int>(pd.component_count())) {
    throw DomainError("component index out of range");
  }
  auto crossings = pd.crossings();
  for (auto& x : crossings) {
    const bool under = pd.component_of(x.arcs[0]) == i;
    const bool over = pd.component_of(x.arcs[1]) == i;
    if (under) {
      // the under-strand now enters through the former outgoing slot
      x.arcs = {x.arcs[2], x.arcs[3], x.arcs[0], x.arcs[1]};
    }
    if (under != over) {
      x.sign = -x.sign;
    }
  }
  auto components = pd.components();
  std::reverse(components[i].begin(), components[i].end());
  return PDCode(std::move(crossings), std::move(components));
}

PDCode disjoint_union(const PDCode& a, const PDCode& b) {
  int offset = 0;
  for (const auto& comp : a.components()) {
    for (int arc : comp) {
      offset = std::max(offset, arc);
    }
  }
  auto crossings = a.crossings();
  for (auto x : b.crossings()) {
    for (int& arc : x.arcs) {
      arc += offset;
    }
    crossings.push_back(x);
  }
  auto components = a.components();
  for (auto comp : b.components()) {
    for (int& arc : comp) {
      arc += offset;
    }
    components.push_back(std::move(comp));
  }
  return PDCode(std::move(crossings), std::move(components));
}

LinkingMatrix::LinkingMatrix(std::size_t size)
    : size_(size), entries_(size * size, 0) {}

int LinkingMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= size_ || j >= size_) {
    throw DomainError("linking matrix index out of range");
  }
  if (i == j && !framed_) {
    throw DomainError("self-linking requires framing");
  }
  return entries_[i * size_ + j];
}

void LinkingMatrix::set(std::size_t i, std::size_t j, int value) {
  if (i >= size_ || j >= size_) {
    throw DomainError("linking matrix index out of range");
  }
  if (i == j) {
    throw DomainError("self-linking is set through set_framing");
  }
  entries_[i * size_ + j] = value;
  entries_[j * size_ + i] = value;
}

void LinkingMatrix::set_framing(std::vector<int> framing) {
  if (framing.size() != size_) {
    throw DomainError("framing vector must have one entry per component");
  }
  for (std::size_t i = 0; i < size_; ++i) {
    entries_[i * size_ + i] = framing[i];
  }
  framed_ = true;
}

LinkingMatrix linking_matrix(const PDCode& pd) {
  std::vector<int> framing;
  for (std::size_t i = 0; i < pd.component_count(); ++i) {
    framing.push_back(component_writhe(pd, static_cast<int>(i)));
  }
  return linking_matrix(pd, std::move(framing));
}

LinkingMatrix linking_matrix(const PDCode& pd, std::vector<int> framing) {
  const std::size_t n = pd.component_count();
  LinkingMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m.set(i, j,
            linking_number(pd, static_cast<int>(i), static_cast<int>(j)));
    }
  }
  m.set_framing(std::move(framing));
  return m;
}

} // namespace cssplit
