#pragma once

// Kauffman-bracket evaluation of SU(2) Wilson-loop expectation values at
// level k. The skein variable is A = exp(i*pi / (2(k+2))), so the value of a
// closed loop is d = -A^2 - A^-2 = -2cos(pi/(k+2)), the negative of the
// quantum dimension. Evaluation is exact; complex numbers are a rendering.

#include <complex>
#include <string>
#include <string_view>

#include "cssplit/cyclotomic.hpp"
#include "cssplit/laurent.hpp"
#include "cssplit/linkmodel.hpp"

namespace cssplit {

enum class Normalization {
  bracket,          // raw state sum; framing dependent
  writhe_corrected, // (-A^3)^{-w} <D>; invariant under all Reidemeister moves
};

enum class Representation { fundamental };

std::string to_string(Normalization n);
Normalization parse_normalization(std::string_view text);

/// Value of a loop, d = -A^2 - A^-2.
LaurentPolynomial loop_value();

/// Bracket as a Laurent polynomial in A with <empty> = 1, <O> = d.
/// Crossings are smoothed one at a time; partial states whose residual
/// diagrams coincide are merged before the next crossing.
LaurentPolynomial bracket_polynomial(const PDCode& pd);

/// Same recursion without merging, branch by branch. Exponential; kept as
/// the reference path for the merged evaluator.
LaurentPolynomial bracket_polynomial_unmerged(const PDCode& pd);

/// The merged recursion carried out in floating point at level k.
std::complex<double> bracket_numeric(const PDCode& pd, int level);

/// Exact bracket at level k. Throws DomainError for k < 1.
RootOfUnityScalar kauffman_bracket(const PDCode& pd, int level);

struct CSExpectation {
  RootOfUnityScalar value;
  std::complex<double> rendered;
  int level;
  Normalization normalization;
  Representation representation = Representation::fundamental;
};

/// Wilson-loop expectation value in the fundamental representation.
CSExpectation cs_expectation(const PDCode& pd, int level,
                             Normalization normalization =
                                 Normalization::writhe_corrected);

/// 2cos(pi/(k+2)).
double quantum_dimension(int level);

} // namespace cssplit
