#include "cssplit/abelian.hpp"

#include "cssplit/error.hpp"
#include "cssplit/laurent.hpp"

namespace cssplit {

char to_char(LoopKind kind) { return kind == LoopKind::W ? 'W' : 'T'; }

ChargedLoop::ChargedLoop(int curve, LoopKind kind, int charge)
    : curve_(curve), kind_(kind), charge_(charge) {
  if (charge == 0) {
    throw DomainError("loop charge must be nonzero");
  }
  if (curve < 0) {
    throw DomainError("curve index must be non-negative");
  }
}

ExactPhase mixed_phase(const ChargedLoop& a, const ChargedLoop& b, int level,
                       int lk) {
  if (level < 1) {
    throw DomainError("level must be at least 1, got " + std::to_string(level));
  }
  if (a.kind() != LoopKind::W || b.kind() != LoopKind::T) {
    throw DomainError("mixed_phase takes a W loop and a T loop; same-kind "
                      "pairs are handled by word reordering");
  }
  const std::int64_t turns =
      checked::mul(checked::mul(a.charge(), b.charge()), lk);
  return {turns, level};
}

ExactPhase configuration_phase(const std::vector<ChargedLoop>& loops,
                               int level, const LinkingMatrix& links) {
  ExactPhase total;
  for (const auto& w : loops) {
    if (w.kind() != LoopKind::W) {
      continue;
    }
    for (const auto& t : loops) {
      if (t.kind() != LoopKind::T) {
        continue;
      }
      const auto i = static_cast<std::size_t>(w.curve());
      const auto j = static_cast<std::size_t>(t.curve());
      if (i >= links.size() || j >= links.size()) {
        throw DomainError("linking matrix has no entry for curves " +
                          std::to_string(i) + ", " + std::to_string(j));
      }
      total *= mixed_phase(w, t, level, links.at(i, j));
    }
  }
  return total;
}

} // namespace cssplit
