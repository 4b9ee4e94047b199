#pragma once

// Independent reference computations used by the unit and acceptance tests.
// None of them share code with the evaluators they check.

#include <array>
#include <string>
#include <vector>

#include "cssplit/laurent.hpp"
#include "cssplit/linkmodel.hpp"

namespace cssplit::testing {

/// Sum over all 2^n smoothings: A^(#A - #B) d^(loops).
LaurentPolynomial brute_force_bracket(const PDCode& pd);

using Vec3 = std::array<double, 3>;
using Polyline = std::vector<Vec3>; // closed: last point joins the first

/// Space curves of the braid closure, one closed polyline per component,
/// in the same component order as braid_closure. Over-strands sit higher in
/// z in the right-handed frame (x = strand position, t = braid time, z).
std::vector<Polyline> braid_embedding(const BraidWord& b);

/// Gauss linking integral of two closed polylines, evaluated exactly per
/// segment pair through the signed solid angle.
double gauss_linking(const Polyline& a, const Polyline& b);

/// Same integral by midpoint quadrature of
/// (1/4pi) Int Int (r1 - r2) . (dr1 x dr2) / |r1 - r2|^3.
double gauss_linking_quadrature(const Polyline& a, const Polyline& b,
                                int subdivisions);

Polyline reversed(const Polyline& p);

/// Inserts a Reidemeister-1 kink on arc `arc` (which must join two
/// different crossing slots). `positive` picks the kink's crossing sign.
PDCode insert_kink(const PDCode& pd, int arc, bool positive);

struct CorpusEntry {
  std::string name;
  BraidWord braid;
  bool knot; // single component
};

/// Ten diagrams with at most 8 crossings.
const std::vector<CorpusEntry>& corpus();

/// Standard 4-crossing figure-eight PD code with signs.
PDCode figure_eight_pd();

} // namespace cssplit::testing
