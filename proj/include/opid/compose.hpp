#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opid/monomial.hpp"
#include "opid/polynomial.hpp"

namespace opid {

/// m o_i B: the i-th argument (1-based) becomes a product of two arguments.
OperatorMonomial comp_m_B(const OperatorMonomial& m, unsigned i);
/// B o_j m: j = 1 multiplies by a new argument on the right, j = 2 on the left.
OperatorMonomial comp_B_m(const OperatorMonomial& m, unsigned j);
/// m o_i L: the i-th argument is wrapped in L.
OperatorMonomial comp_m_L(const OperatorMonomial& m, unsigned i);
/// L o m: the whole monomial is wrapped in L.
OperatorMonomial comp_L_m(const OperatorMonomial& m);

/// Homogeneous linear combination of operator monomials with polynomial
/// coefficients. Zero coefficients are never stored.
class OperatorPolynomial {
 public:
  using Terms = std::map<OperatorMonomial, Polynomial>;

  explicit OperatorPolynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// sum_k coeffs[k] * basis[k].
  static OperatorPolynomial generic(RingPtr ring,
                                    const std::vector<OperatorMonomial>& basis,
                                    const std::vector<Polynomial>& coeffs);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const { return degree_; }
  unsigned multiplicity() const { return mult_; }

  /// Adds c * m; throws std::invalid_argument on inhomogeneous input.
  void add(const OperatorMonomial& m, const Polynomial& c);
  Polynomial coefficient(const OperatorMonomial& m) const;

  /// Applies a monomial map to every term and collects like terms.
  template <class F>
  OperatorPolynomial map(F&& f) const {
    OperatorPolynomial out(ring_);
    for (const auto& [m, c] : terms_) out.add(f(m), c);
    return out;
  }

  /// Letters notation, e.g. "a*L(xy) + b*L(x)y".
  std::string to_string(bool collapse_powers = true) const;

  friend bool operator==(const OperatorPolynomial& a,
                         const OperatorPolynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  RingPtr ring_;
  Terms terms_;
  unsigned degree_ = 0;
  unsigned mult_ = 0;
};

/// One composition word producing a consequence. Unused indices are 0.
struct ConsequenceSpec {
  enum class Kind {
    MB_THEN_L,   // (R o_i B) o_k L
    L_AFTER_MB,  // L o (R o_i B)
    BM_THEN_L,   // (B o_j R) o_k L
    L_AFTER_BM,  // L o (B o_j R)
    ML_THEN_B,   // (R o_i L) o_k B
    B_AFTER_ML,  // B o_j (R o_i L)
    LM_THEN_B,   // (L o R) o_k B
    B_AFTER_LM,  // B o_j (L o R)
  };
  Kind kind;
  unsigned i = 0, j = 0, k = 0;

  std::string label() const;
  OperatorMonomial apply(const OperatorMonomial& m) const;
};

struct Consequence {
  ConsequenceSpec spec;
  OperatorPolynomial value;
  /// Index of an earlier equal consequence, if any.
  std::optional<std::size_t> duplicate_of;
};

/// The composition words for degree p in their fixed order:
/// degree-first words, then multiplicity-first words.
std::vector<ConsequenceSpec> consequence_specs(unsigned p);

/// All (p+2)(2p+3) consequences of R, with duplicates marked.
std::vector<Consequence> consequences(const OperatorPolynomial& R);

}  // namespace opid
