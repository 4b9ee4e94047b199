#pragma once

// Link diagrams (braid words, PD codes) and loops on the torus, together with
// the topological integers computed from them: linking numbers, writhe and
// homological intersection numbers.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cssplit {

/// A braid word on `strand_count` strands. Letter +i is sigma_i, -i is its
/// inverse, with 1 <= i < strand_count.
class BraidWord {
public:
  BraidWord(int strand_count, std::vector<int> letters);

  int strand_count() const noexcept { return strand_count_; }
  const std::vector<int>& letters() const noexcept { return letters_; }

  /// Strand permutation: position p at the bottom ends at perm[p] on top.
  std::vector<int> permutation() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  int strand_count_;
  std::vector<int> letters_;
};

/// Parses whitespace-separated signed generator indices ("1 1 1", "-2 1").
/// The strand count defaults to max|index| + 1 (or 1 for the empty word).
BraidWord parse_braid(std::string_view text,
                      std::optional<int> strand_count = std::nullopt);

/// One crossing X[a, b, c, d]: `a` is the incoming under-arc and the labels
/// run counterclockwise, so `c` is the outgoing under-arc and {b, d} carry
/// the over-strand. The sign is stored, +1 for a right-handed crossing.
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Planar-diagram code of an oriented link. Each component lists its arcs
/// in traversal order; a component without crossings is a single arc that
/// appears in no crossing.
///
/// Construction validates the code: every arc of a crossed component
/// appears exactly twice among the crossings, consecutive arcs of a
/// component meet at a crossing, and every stored sign agrees with the
/// orientation induced by the component order.
class PDCode {
public:
  PDCode() = default;
  PDCode(std::vector<Crossing> crossings,
         std::vector<std::vector<int>> components);

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const std::vector<std::vector<int>>& components() const noexcept {
    return components_;
  }
  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  std::size_t component_count() const noexcept { return components_.size(); }

  /// Component index of an arc label.
  int component_of(int arc) const;
  /// Components of the under- and over-strand at crossing `c`.
  int under_component(std::size_t c) const;
  int over_component(std::size_t c) const;
  /// Number of components that meet no crossing.
  int crossingless_components() const;

  friend bool operator==(const PDCode&, const PDCode&) = default;

private:
  std::vector<Crossing> crossings_;
  std::vector<std::vector<int>> components_;
  std::map<int, int> arc_component_;
};

/// PD code of the trace closure of a braid. Crossing count equals the letter
/// count; components follow the cycles of the strand permutation.
PDCode braid_closure(const BraidWord& b);

/// Sum of all crossing signs.
int writhe(const PDCode& pd);
/// Sum of the signs of crossings where component i crosses itself.
int component_writhe(const PDCode& pd, int i);

/// Half the signed count of crossings between components i and j (i != j).
int linking_number(const PDCode& pd, int i, int j);

/// Same link with component i traversed backwards.
PDCode reverse_component(const PDCode& pd, int i);
/// Split union; arcs of `b` are relabelled after those of `a`.
PDCode disjoint_union(const PDCode& a, const PDCode& b);

/// Symmetric matrix of pairwise linking numbers. The diagonal holds
/// self-linking (framing) integers and is only readable when `framed()`.
class LinkingMatrix {
public:
  explicit LinkingMatrix(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool framed() const noexcept { return framed_; }

  int at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, int value);
  void set_framing(std::vector<int> framing);

private:
  std::size_t size_;
  bool framed_ = false;
  std::vector<int> entries_;
};

/// Linking matrix with blackboard framing (component writhe) on the diagonal.
LinkingMatrix linking_matrix(const PDCode& pd);
/// Linking matrix with explicit framing integers.
LinkingMatrix linking_matrix(const PDCode& pd, std::vector<int> framing);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Closed curve on the unit torus, given as a piecewise-linear path in the
/// universal cover. The last vertex equals the first shifted by the winding.
class TorusLoop {
public:
  TorusLoop(std::array<int, 2> winding, std::vector<Point2> vertices);

  /// Straight loop of winding (p, q) through `basepoint`.
  static TorusLoop straight(int p, int q, Point2 basepoint);

  std::array<int, 2> winding() const noexcept { return winding_; }
  Point2 basepoint() const noexcept { return vertices_.front(); }
  const std::vector<Point2>& vertices() const noexcept { return vertices_; }

private:
  std::array<int, 2> winding_;
  std::vector<Point2> vertices_;
};

/// Homological intersection pairing p_a q_b - q_a p_b, cross-checked against
/// the signed segment-crossing count. Throws DomainError("perturb basepoint")
/// when the loops are not in generic position.
int intersection_number(const TorusLoop& a, const TorusLoop& b);

/// Signed count of transverse crossings between the two loops on the torus.
int pl_crossing_count(const TorusLoop& a, const TorusLoop& b);

} // namespace cssplit
