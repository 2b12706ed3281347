#pragma once

#include <vector>

#include "opid/compose.hpp"
#include "opid/polylinalg.hpp"

namespace opid {

struct ConsequenceMatrix {
  unsigned p = 0, q = 0;
  /// One variable per basis monomial of O(p,q): a, b, c, ...
  RingPtr ring;
  std::vector<OperatorMonomial> coefficient_basis;
  OperatorPolynomial R{nullptr};
  /// All (p+2)(2p+3) consequences with duplicates marked.
  std::vector<Consequence> raw;
  /// Distinct consequences (first occurrences), in row order.
  std::vector<ConsequenceSpec> row_labels;
  /// Basis of O(p+1,q+1), in column order.
  std::vector<OperatorMonomial> col_labels;
  PolyMatrix matrix;
};

/// Coefficient names for n basis monomials: a, b, c, ... (at most 15).
std::vector<std::string> coefficient_names(std::size_t n);

ConsequenceMatrix build_consequence_matrix(unsigned p, unsigned q);

/// Entrywise substitution; unassigned variables stay symbolic.
PolyMatrix specialize(const ConsequenceMatrix& C, const RationalPoint& coeffs);

/// The coefficient vector as a point of the coefficient ring.
RationalPoint coefficient_point(const ConsequenceMatrix& C,
                                const std::vector<Rational>& values);

}  // namespace opid
