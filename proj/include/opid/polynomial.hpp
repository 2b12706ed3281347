#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace opid {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact rational from a numerator/denominator pair, already canonical.
Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& r);

/// How ties of equal total degree are broken in the graded order.
enum class LexTiebreak {
  /// Compare the exponent of the highest-precedence (last listed) variable
  /// first, so that with variables a < b < ... < f the square f^2 is the
  /// largest degree-2 monomial.
  LastVariableFirst,
  /// Compare the exponent of the first listed variable first.
  FirstVariableFirst,
};

struct MonomialOrder {
  LexTiebreak tiebreak = LexTiebreak::LastVariableFirst;

  bool operator==(const MonomialOrder&) const = default;
  std::string name() const;
};

/// Packed exponent vector. Byte 15 holds the total degree and each variable
/// occupies one byte whose position is chosen by the owning ring so that
/// plain integer comparison realises the ring's graded order. A Monomial is
/// only meaningful together with the Ring that produced it.
class Monomial {
 public:
  using Bits = unsigned __int128;

  constexpr Monomial() = default;
  constexpr explicit Monomial(Bits bits) : bits_(bits) {}

  constexpr Bits bits() const { return bits_; }
  unsigned degree() const { return static_cast<unsigned>(bits_ >> 120); }
  unsigned byte(unsigned pos) const {
    return static_cast<unsigned>((bits_ >> (8 * pos)) & 0xff);
  }

  Monomial operator*(Monomial other) const;
  /// True when this monomial divides `other`.
  bool divides(Monomial other) const;
  /// other / this; caller guarantees divisibility.
  Monomial quotient_of(Monomial other) const;
  Monomial lcm(Monomial other) const;
  Monomial gcd(Monomial other) const;
  bool coprime(Monomial other) const;
  bool is_one() const { return bits_ == 0; }

  friend constexpr auto operator<=>(Monomial a, Monomial b) = default;
  friend constexpr bool operator==(Monomial a, Monomial b) = default;

 private:
  Bits bits_ = 0;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Ordered list of variable names together with a monomial order.
class Ring {
 public:
  static constexpr std::size_t kMaxVariables = 15;
  static constexpr unsigned kMaxExponent = 127;

  static RingPtr make(std::vector<std::string> variables,
                      MonomialOrder order = {});

  std::size_t size() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::string& variable(std::size_t i) const { return vars_.at(i); }
  const MonomialOrder& order() const { return order_; }
  /// Index of `name`, or -1 when absent.
  int index_of(std::string_view name) const;

  Monomial monomial(std::span<const unsigned> exponents) const;
  Monomial variable_monomial(std::size_t var, unsigned power = 1) const;
  unsigned exponent(Monomial m, std::size_t var) const {
    return m.byte(pos_[var]);
  }
  std::vector<unsigned> exponents(Monomial m) const;

  bool operator==(const Ring& other) const {
    return vars_ == other.vars_ && order_ == other.order_;
  }

  /// Total-degree-first comparison of two monomials of this ring under an
  /// arbitrary order (the ring's own order is plain integer comparison).
  std::strong_ordering compare(Monomial a, Monomial b,
                               const MonomialOrder& ord) const;

  std::string render(Monomial m) const;

 private:
  Ring(std::vector<std::string> variables, MonomialOrder order);
  std::vector<std::string> vars_;
  MonomialOrder order_;
  std::vector<unsigned> pos_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Rational coef;
  };

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Monomial m, const Rational& c);
  /// Builds from unsorted terms, combining like monomials and dropping zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The constant value when is_constant().
  Rational constant_value() const;
  unsigned total_degree() const;
  /// Largest exponent of `var` among the terms.
  unsigned degree_in(std::size_t var) const;
  /// Variables with a nonzero exponent somewhere.
  std::vector<std::size_t> support() const;

  /// Ord-maximal term; throws std::domain_error for the zero polynomial.
  const Term& leading_term() const;
  Term leading_term(const MonomialOrder& ord) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) {
    return a *= c;
  }
  friend Polynomial operator*(const Rational& c, Polynomial a) {
    return a *= c;
  }
  Polynomial pow(unsigned e) const;
  /// Multiplies by a single term.
  Polynomial times_term(Monomial m, const Rational& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Positive rational content c such that p / c has coprime integer
  /// coefficients; zero for the zero polynomial.
  Rational content() const;
  /// p / content, with positive leading coefficient.
  Polynomial primitive() const;
  /// p scaled so that the leading coefficient is 1.
  Polynomial monic() const;

  std::string to_string() const;
  static Polynomial parse(RingPtr ring, std::string_view text);

  /// Deterministic total order used for sorting and deduplication of
  /// polynomial collections: by term sequence under the ring order.
  static bool canonical_less(const Polynomial& a, const Polynomial& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;  // strictly descending in the ring order
};

/// Variable name -> replacement polynomial (in the same ring as the target).
using Assignment = std::map<std::string, Polynomial>;
using RationalPoint = std::map<std::string, Rational>;

Assignment to_assignment(const RingPtr& ring, const RationalPoint& point);

/// Simultaneous substitution; unassigned variables are kept.
Polynomial substitute(const Polynomial& p, const Assignment& assignment);
Polynomial substitute(const Polynomial& p, const RationalPoint& point);
/// Full evaluation; throws std::invalid_argument when a variable of the
/// support is unassigned.
Rational evaluate(const Polynomial& p, const RationalPoint& point);

/// Evaluates p with each variable replaced by its image, a polynomial in
/// `target`. Variables without an image map to the same-named variable of
/// `target`; a missing one throws std::invalid_argument.
Polynomial compose(const Polynomial& p,
                   const std::map<std::string, Polynomial>& images,
                   const RingPtr& target);

/// Re-expresses p in `target` by matching variable names. Throws if p uses
/// a variable that `target` lacks.
Polynomial change_ring(const Polynomial& p, const RingPtr& target);

/// Multivariate division by a single divisor under the ring order.
/// Returns (quotient, remainder).
std::pair<Polynomial, Polynomial> divide(const Polynomial& p,
                                         const Polynomial& d);
/// True when d divides p exactly; the quotient is stored when requested.
bool divides_exactly(const Polynomial& d, const Polynomial& p,
                     Polynomial* quotient = nullptr);

/// Factorisation by monomial-content extraction and trial division against
/// small candidate linear and quadratic factors. Not a complete factoriser:
/// the product of the returned factors (times the returned unit) equals p.
struct TrialFactorization {
  Rational unit;
  std::vector<std::pair<Polynomial, unsigned>> factors;
};
TrialFactorization factor_trial(const Polynomial& p);
std::string render_factored(const TrialFactorization& f);

nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace opid
