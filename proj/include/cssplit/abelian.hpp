#pragma once

// U(1)_k expectation phases for configurations of abelian Wilson (W) and
// 't Hooft (T) loops.
//
// Convention: a linked W-T pair with charges n, m and linking (or
// intersection) integer l contributes exp(2*pi*i * n*m*l / k). Its ratio to
// the unlinked value is the exchange factor of T(C1) W(C2) =
// exp(2*pi*i*l(C1,C2)/k) W(C2) T(C1). W-W and T-T pairs contribute 1; only
// ratios of these phases carry meaning.

#include <vector>

#include "cssplit/linkmodel.hpp"
#include "cssplit/phase.hpp"

namespace cssplit {

enum class LoopKind { W, T };

char to_char(LoopKind kind);

class ChargedLoop {
public:
  /// `curve` indexes the rows of the linking matrix the loop is used with.
  ChargedLoop(int curve, LoopKind kind, int charge);

  int curve() const noexcept { return curve_; }
  LoopKind kind() const noexcept { return kind_; }
  int charge() const noexcept { return charge_; }

private:
  int curve_;
  LoopKind kind_;
  int charge_;
};

/// Phase of a W loop `a` and a T loop `b` with linking integer `lk`.
ExactPhase mixed_phase(const ChargedLoop& a, const ChargedLoop& b, int level,
                       int lk);

/// Product of mixed_phase over all W-T pairs. Pairs on the same curve read
/// the diagonal of `links`, which therefore must be framed.
ExactPhase configuration_phase(const std::vector<ChargedLoop>& loops,
                               int level, const LinkingMatrix& links);

} // namespace cssplit
