#include "opid/conmatrix.hpp"

#include <stdexcept>

namespace opid {

std::vector<std::string> coefficient_names(std::size_t n) {
  if (n > Ring::kMaxVariables)
    throw std::invalid_argument("too many coefficients for one ring");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k)
    names.emplace_back(1, static_cast<char>('a' + k));
  return names;
}

ConsequenceMatrix build_consequence_matrix(unsigned p, unsigned q) {
  ConsequenceMatrix C;
  C.p = p;
  C.q = q;
  C.coefficient_basis = enumerate_monomials(p, q);
  C.ring = Ring::make(coefficient_names(C.coefficient_basis.size()));
  std::vector<Polynomial> coeffs;
  for (std::size_t k = 0; k < C.coefficient_basis.size(); ++k)
    coeffs.push_back(Polynomial::variable(C.ring, k));
  C.R = OperatorPolynomial::generic(C.ring, C.coefficient_basis, coeffs);
  C.raw = consequences(C.R);
  C.col_labels = enumerate_monomials(p + 1, q + 1);
  std::map<OperatorMonomial, std::size_t> column;
  for (std::size_t j = 0; j < C.col_labels.size(); ++j)
    column.emplace(C.col_labels[j], j);

  std::vector<const Consequence*> rows;
  for (const auto& c : C.raw)
    if (!c.duplicate_of) rows.push_back(&c);
  C.matrix = PolyMatrix(C.ring, rows.size(), C.col_labels.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    C.row_labels.push_back(rows[i]->spec);
    for (const auto& [m, coef] : rows[i]->value.terms()) {
      auto it = column.find(m);
      if (it == column.end())
        throw std::logic_error("consequence outside the target basis: " +
                               m.render());
      C.matrix.at(i, it->second) = coef;
    }
  }
  return C;
}

PolyMatrix specialize(const ConsequenceMatrix& C, const RationalPoint& coeffs) {
  return C.matrix.substitute(coeffs);
}

RationalPoint coefficient_point(const ConsequenceMatrix& C,
                                const std::vector<Rational>& values) {
  if (values.size() != C.ring->size())
    throw std::invalid_argument("expected " + std::to_string(C.ring->size()) +
                                " coefficients");
  RationalPoint pt;
  for (std::size_t k = 0; k < values.size(); ++k)
    pt[C.ring->variable(k)] = values[k];
  return pt;
}

}  // namespace opid
