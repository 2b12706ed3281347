#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "opid/polynomial.hpp"

namespace opid {

/// N(i,j) = (1/i) C(i,j) C(i,j-1). Throws std::invalid_argument unless
/// 1 <= j <= i.
Integer narayana(long i, long j);

/// A balanced string over '(' and ')'. Plain std::string so that ordinary
/// string comparison gives the dictionary order with '(' before ')'.
using ParenString = std::string;

bool is_balanced(std::string_view s);
/// Number of adjacent "()" pairs.
unsigned nesting_count(std::string_view s);

/// Planar tree of one operator monomial. Products are n-ary and never
/// directly nested inside another product.
struct MonomialNode {
  enum class Kind { Arg, Op, Product };
  Kind kind = Kind::Arg;
  std::vector<MonomialNode> children;

  static MonomialNode arg() { return {}; }
  static MonomialNode op(MonomialNode child);
  /// Flattens nested products; a single item is returned unwrapped.
  static MonomialNode product(std::vector<MonomialNode> items);

  friend bool operator==(const MonomialNode&, const MonomialNode&) = default;
};

enum class RenderStyle { Star, Letters };

class OperatorMonomial {
 public:
  OperatorMonomial() : OperatorMonomial(MonomialNode::arg()) {}
  explicit OperatorMonomial(MonomialNode root);

  static OperatorMonomial from_paren(std::string_view s);
  /// Parses the star notation, e.g. "L(L(*)**)*". Also accepts letters in
  /// place of stars.
  static OperatorMonomial from_text(std::string_view s);

  const MonomialNode& root() const { return root_; }
  unsigned degree() const { return degree_; }
  unsigned multiplicity() const { return mult_; }
  const ParenString& paren() const { return paren_; }

  /// Star or letter notation. With collapse_powers, L(L(x)) prints as L2(x).
  std::string render(RenderStyle style = RenderStyle::Star,
                     bool collapse_powers = false) const;

  friend bool operator==(const OperatorMonomial& a, const OperatorMonomial& b) {
    return a.paren_ == b.paren_;
  }
  /// Dictionary order of the parenthesis strings.
  friend std::strong_ordering operator<=>(const OperatorMonomial& a,
                                          const OperatorMonomial& b) {
    return a.paren_ <=> b.paren_;
  }

 private:
  MonomialNode root_;
  ParenString paren_;
  unsigned degree_ = 0;
  unsigned mult_ = 0;
};

ParenString monomial_to_paren(const OperatorMonomial& m);
OperatorMonomial paren_to_monomial(std::string_view s);

/// All monomials of degree p and multiplicity q in increasing order.
std::vector<OperatorMonomial> enumerate_monomials(unsigned p, unsigned q);

/// Argument names for a monomial of degree p: x,y,z up to three, then
/// w,x,y,z and v,w,x,y,z, then x1..xp.
std::vector<std::string> argument_letters(unsigned p);

}  // namespace opid
