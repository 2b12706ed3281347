#include "opid/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace opid {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string MonomialOrder::name() const {
  return tiebreak == LexTiebreak::LastVariableFirst ? "deglex(last-first)"
                                                    : "deglex(first-first)";
}

// ---------------------------------------------------------------------------
// Monomial

namespace {

constexpr Monomial::Bits repeat_byte(unsigned v) {
  Monomial::Bits r = 0;
  for (int i = 0; i < 16; ++i) r = (r << 8) | v;
  return r;
}
constexpr Monomial::Bits kHigh = repeat_byte(0x80);

}  // namespace

Monomial Monomial::operator*(Monomial other) const {
  if (degree() + other.degree() > Ring::kMaxExponent)
    throw std::overflow_error("monomial degree overflow");
  // Exponents never exceed the per-byte bound because they are bounded by
  // the total degree.
  return Monomial(bits_ + other.bits_);
}

bool Monomial::divides(Monomial other) const {
  // Every byte is < 128, so (o | 0x80) - t never borrows across bytes and
  // its high bit survives iff o >= t.
  return (((other.bits_ | kHigh) - bits_) & kHigh) == kHigh;
}

Monomial Monomial::quotient_of(Monomial other) const {
  return Monomial(other.bits_ - bits_);
}

Monomial Monomial::lcm(Monomial other) const {
  Bits r = 0;
  unsigned deg = 0;
  for (unsigned pos = 0; pos < 15; ++pos) {
    unsigned e = std::max(byte(pos), other.byte(pos));
    deg += e;
    r |= Bits(e) << (8 * pos);
  }
  return Monomial(r | (Bits(deg) << 120));
}

Monomial Monomial::gcd(Monomial other) const {
  Bits r = 0;
  unsigned deg = 0;
  for (unsigned pos = 0; pos < 15; ++pos) {
    unsigned e = std::min(byte(pos), other.byte(pos));
    deg += e;
    r |= Bits(e) << (8 * pos);
  }
  return Monomial(r | (Bits(deg) << 120));
}

bool Monomial::coprime(Monomial other) const {
  for (unsigned pos = 0; pos < 15; ++pos)
    if (byte(pos) != 0 && other.byte(pos) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(std::vector<std::string> variables, MonomialOrder order)
    : vars_(std::move(variables)), order_(order) {
  const auto n = static_cast<unsigned>(vars_.size());
  pos_.resize(n);
  for (unsigned k = 0; k < n; ++k)
    pos_[k] = order_.tiebreak == LexTiebreak::LastVariableFirst ? 15 - n + k
                                                                 : 14 - k;
}

RingPtr Ring::make(std::vector<std::string> variables, MonomialOrder order) {
  if (variables.size() > kMaxVariables)
    throw std::invalid_argument("too many ring variables");
  for (std::size_t i = 0; i < variables.size(); ++i) {
    const auto& v = variables[i];
    if (v.empty() || !std::islower(static_cast<unsigned char>(v[0])))
      throw std::invalid_argument("invalid variable name '" + v + "'");
    for (char ch : v)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
        throw std::invalid_argument("invalid variable name '" + v + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (variables[j] == v)
        throw std::invalid_argument("duplicate variable '" + v + "'");
  }
  return RingPtr(new Ring(std::move(variables), order));
}

int Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

Monomial Ring::monomial(std::span<const unsigned> exponents) const {
  if (exponents.size() != vars_.size())
    throw std::invalid_argument("exponent vector length mismatch");
  Monomial::Bits r = 0;
  unsigned deg = 0;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    deg += exponents[k];
    r |= Monomial::Bits(exponents[k]) << (8 * pos_[k]);
  }
  if (deg > kMaxExponent) throw std::overflow_error("monomial degree overflow");
  return Monomial(r | (Monomial::Bits(deg) << 120));
}

Monomial Ring::variable_monomial(std::size_t var, unsigned power) const {
  std::vector<unsigned> e(vars_.size(), 0);
  e.at(var) = power;
  return monomial(e);
}

std::vector<unsigned> Ring::exponents(Monomial m) const {
  std::vector<unsigned> e(vars_.size());
  for (std::size_t k = 0; k < vars_.size(); ++k) e[k] = exponent(m, k);
  return e;
}

std::strong_ordering Ring::compare(Monomial a, Monomial b,
                                   const MonomialOrder& ord) const {
  if (ord == order_) return a <=> b;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const std::size_t n = vars_.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k =
        ord.tiebreak == LexTiebreak::LastVariableFirst ? n - 1 - i : i;
    if (auto c = exponent(a, k) <=> exponent(b, k); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Ring::render(Monomial m) const {
  std::string out;
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    unsigned e = exponent(m, k);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += vars_[k];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

void require_same(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw std::invalid_argument("ring mismatch");
}

using Terms = std::vector<Polynomial::Term>;

// Merge two descending term lists, b scaled by `sign`.
Terms merge(const Terms& a, const Terms& b, int sign) {
  Terms out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].mono > b[j].mono) {
      out.push_back(a[i++]);
    } else if (b[j].mono > a[i].mono) {
      out.push_back({b[j].mono, sign > 0 ? b[j].coef : Rational(-b[j].coef)});
      ++j;
    } else {
      Rational c = a[i].coef;
      if (sign > 0)
        c += b[j].coef;
      else
        c -= b[j].coef;
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j)
    out.push_back({b[j].mono, sign > 0 ? b[j].coef : Rational(-b[j].coef)});
  return out;
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial(), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  int idx = ring->index_of(name);
  if (idx < 0)
    throw std::invalid_argument("unknown variable '" + std::string(name) +
                                "'");
  return variable(std::move(ring), static_cast<std::size_t>(idx));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m = ring->variable_monomial(index);
  return monomial(std::move(ring), m, 1);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.mono > y.mono; });
  Polynomial p(std::move(ring));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw std::domain_error("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_[0].coef;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, ring_->exponent(t.mono, var));
  return d;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> out;
  if (!ring_) return out;
  for (std::size_t k = 0; k < ring_->size(); ++k)
    if (degree_in(k) > 0) out.push_back(k);
  return out;
}

const Polynomial::Term& Polynomial::leading_term() const {
  if (terms_.empty())
    throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

Polynomial::Term Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty())
    throw std::domain_error("leading term of the zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (ring_->compare(t.mono, best->mono, ord) > 0) best = &t;
  return *best;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (!ring_) ring_ = other.ring_;
  if (other.terms_.empty()) return *this;
  require_same(ring_, other.ring_);
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (!ring_) ring_ = other.ring_;
  if (other.terms_.empty()) return *this;
  require_same(ring_, other.ring_);
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same(a.ring_, b.ring_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (b.size() == 1) return a.times_term(b.terms_[0].mono, b.terms_[0].coef);
  if (a.size() == 1) return b.times_term(a.terms_[0].mono, a.terms_[0].coef);
  std::vector<Polynomial::Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_)
      prod.push_back({x.mono * y.mono, x.coef * y.coef});
  return Polynomial::from_terms(a.ring_, std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::times_term(Monomial m, const Rational& c) const {
  Polynomial p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the order of a graded order.
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coef * c});
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  if (!same_ring(a.ring_, b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono ||
        a.terms_[i].coef != b.terms_[i].coef)
      return false;
  return true;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return 0;
  Integer num = 0, den = 1;
  for (const auto& t : terms_) {
    num = gcd(num, Integer(t.coef.get_num()));
    den = lcm(den, Integer(t.coef.get_den()));
  }
  Rational c(num, den);
  c.canonicalize();
  return abs(c);
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (terms_.front().coef < 0) c = -c;
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef /= c;
  return p;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational c = terms_.front().coef;
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef /= c;
  return p;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    if (t.mono.is_one()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += ring_->render(t.mono);
    }
    first = false;
  }
  return out;
}

bool Polynomial::canonical_less(const Polynomial& a, const Polynomial& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono)
      return a.terms_[i].mono < b.terms_[i].mono;
    if (a.terms_[i].coef != b.terms_[i].coef)
      return a.terms_[i].coef < b.terms_[i].coef;
  }
  return a.terms_.size() < b.terms_.size();
}

// ---------------------------------------------------------------------------
// Parsing: expr := term (('+'|'-') term)*, term := unary (('*'|'/') unary)*,
// unary := '-' unary | '+' unary | power, power := atom ('^' int)?,
// atom := integer | variable | '(' expr ')'.

namespace {

class Parser {
 public:
  Parser(RingPtr ring, std::string_view text)
      : ring_(std::move(ring)), text_(text) {}

  Polynomial run() {
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " +
                                std::to_string(pos_) + ": " + what + " in '" +
                                std::string(text_) + "'");
  }
  void skip() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool accept(char ch) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by non-constant");
        acc *= Rational(1) / d.constant_value();
      } else {
        skip();
        if (pos_ < text_.size() &&
            (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
             text_[pos_] == '('))
          fail("implicit multiplication is not allowed; use '*'");
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > Ring::kMaxExponent) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      Integer v(std::string(text_.substr(start, pos_ - start)));
      return Polynomial::constant(ring_, Rational(v));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      int idx = ring_->index_of(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    fail("unexpected character");
  }

  RingPtr ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text) {
  return Parser(std::move(ring), text).run();
}

// ---------------------------------------------------------------------------
// Substitution

Assignment to_assignment(const RingPtr& ring, const RationalPoint& point) {
  Assignment a;
  for (const auto& [name, value] : point)
    a.emplace(name, Polynomial::constant(ring, value));
  return a;
}

Polynomial substitute(const Polynomial& p, const Assignment& assignment) {
  const RingPtr& ring = p.ring();
  if (!ring || p.is_zero()) return p;
  const std::size_t n = ring->size();
  std::vector<const Polynomial*> repl(n, nullptr);
  for (const auto& [name, value] : assignment) {
    int idx = ring->index_of(name);
    if (idx < 0) continue;
    require_same(ring, value.ring());
    repl[static_cast<std::size_t>(idx)] = &value;
  }
  // powers[k][e] = repl[k]^e, built lazily.
  std::vector<std::vector<Polynomial>> powers(n);
  auto power_of = [&](std::size_t k, unsigned e) -> const Polynomial& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(Polynomial::constant(ring, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * *repl[k]);
    return cache[e];
  };
  Polynomial out(ring);
  std::vector<Polynomial::Term> kept;
  for (const auto& t : p.terms()) {
    std::vector<unsigned> exps = ring->exponents(t.mono);
    Polynomial factor = Polynomial::constant(ring, t.coef);
    bool any = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (exps[k] == 0 || !repl[k]) continue;
      factor *= power_of(k, exps[k]);
      exps[k] = 0;
      any = true;
      if (factor.is_zero()) break;
    }
    if (!any) {
      kept.push_back(t);
      continue;
    }
    if (factor.is_zero()) continue;
    out += factor.times_term(ring->monomial(exps), 1);
  }
  out += Polynomial::from_terms(ring, std::move(kept));
  return out;
}

Polynomial substitute(const Polynomial& p, const RationalPoint& point) {
  if (!p.ring()) return p;
  return substitute(p, to_assignment(p.ring(), point));
}

Rational evaluate(const Polynomial& p, const RationalPoint& point) {
  Polynomial s = substitute(p, point);
  if (!s.is_constant())
    throw std::invalid_argument("evaluation point does not cover '" +
                                p.to_string() + "'");
  return s.constant_value();
}

Polynomial compose(const Polynomial& p,
                   const std::map<std::string, Polynomial>& images,
                   const RingPtr& target) {
  const RingPtr& src = p.ring();
  Polynomial out(target);
  if (p.is_zero()) return out;
  const std::size_t n = src->size();
  std::vector<Polynomial> image(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto it = images.find(src->variable(k));
    if (it != images.end()) {
      require_same(it->second.ring() ? it->second.ring() : target, target);
      image[k] = it->second.ring() ? it->second : Polynomial(target);
    } else if (target->index_of(src->variable(k)) >= 0) {
      image[k] = Polynomial::variable(target, src->variable(k));
    } else if (p.degree_in(k) > 0) {
      throw std::invalid_argument("no image for variable '" +
                                  src->variable(k) + "'");
    }
  }
  std::vector<std::vector<Polynomial>> powers(n);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coef);
    for (std::size_t k = 0; k < n && !term.is_zero(); ++k) {
      unsigned e = src->exponent(t.mono, k);
      if (e == 0) continue;
      auto& cache = powers[k];
      if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
      while (cache.size() <= e) cache.push_back(cache.back() * image[k]);
      term *= cache[e];
    }
    out += term;
  }
  return out;
}

Polynomial change_ring(const Polynomial& p, const RingPtr& target) {
  if (same_ring(p.ring(), target)) return p;
  const RingPtr& src = p.ring();
  std::vector<int> map(src ? src->size() : 0);
  for (std::size_t k = 0; k < map.size(); ++k)
    map[k] = target->index_of(src->variable(k));
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.size());
  std::vector<unsigned> dst(target->size());
  for (const auto& t : p.terms()) {
    std::fill(dst.begin(), dst.end(), 0u);
    for (std::size_t k = 0; k < map.size(); ++k) {
      unsigned e = src->exponent(t.mono, k);
      if (e == 0) continue;
      if (map[k] < 0)
        throw std::invalid_argument("variable '" + src->variable(k) +
                                    "' missing in target ring");
      dst[static_cast<std::size_t>(map[k])] = e;
    }
    terms.push_back({target->monomial(dst), t.coef});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

// ---------------------------------------------------------------------------
// Division and trial factorisation

std::pair<Polynomial, Polynomial> divide(const Polynomial& p,
                                         const Polynomial& d) {
  require_same(p.ring(), d.ring());
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  const auto& lt = d.leading_term();
  Polynomial q(p.ring()), r(p.ring()), rest = p;
  std::vector<Polynomial::Term> rem_terms;
  while (!rest.is_zero()) {
    const auto& t = rest.leading_term();
    if (lt.mono.divides(t.mono)) {
      Monomial m = lt.mono.quotient_of(t.mono);
      Rational c = t.coef / lt.coef;
      q += Polynomial::monomial(p.ring(), m, c);
      rest -= d.times_term(m, c);
    } else {
      rem_terms.push_back(t);
      rest -= Polynomial::monomial(p.ring(), t.mono, t.coef);
    }
  }
  r = Polynomial::from_terms(p.ring(), std::move(rem_terms));
  return {q, r};
}

bool divides_exactly(const Polynomial& d, const Polynomial& p,
                     Polynomial* quotient) {
  require_same(p.ring(), d.ring());
  if (d.is_zero()) return p.is_zero();
  const auto& lt = d.leading_term();
  Polynomial q(p.ring()), rest = p;
  while (!rest.is_zero()) {
    const auto& t = rest.leading_term();
    if (!lt.mono.divides(t.mono)) return false;
    Monomial m = lt.mono.quotient_of(t.mono);
    Rational c = t.coef / lt.coef;
    q += Polynomial::monomial(p.ring(), m, c);
    rest -= d.times_term(m, c);
  }
  if (quotient) *quotient = std::move(q);
  return true;
}

namespace {

std::vector<Polynomial> candidate_factors(const RingPtr& ring,
                                          const std::vector<std::size_t>& vars) {
  std::vector<Polynomial> out;
  auto var = [&](std::size_t k) { return Polynomial::variable(ring, k); };
  auto cst = [&](long c) { return Polynomial::constant(ring, c); };
  const std::size_t n = vars.size();
  for (std::size_t i = 0; i < n; ++i)
    for (long c : {1L, -1L, 2L, -2L}) out.push_back(var(vars[i]) + cst(c));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (long s : {1L, -1L})
        for (long c : {0L, 1L, -1L, 2L, -2L})
          out.push_back(var(vars[i]) + cst(s) * var(vars[j]) + cst(c));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (long s1 : {1L, -1L})
          for (long s2 : {1L, -1L})
            for (long c : {0L, 1L, -1L})
              out.push_back(var(vars[i]) + cst(s1) * var(vars[j]) +
                            cst(s2) * var(vars[k]) + cst(c));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j)
        for (long s : {1L, -1L})
          out.push_back(var(vars[i]).pow(2) + cst(s) * var(vars[j]));
  for (auto& f : out) f = f.primitive();
  return out;
}

}  // namespace

TrialFactorization factor_trial(const Polynomial& p) {
  TrialFactorization result;
  if (p.is_zero()) {
    result.unit = 0;
    return result;
  }
  const RingPtr& ring = p.ring();
  Polynomial rest = p.primitive();
  result.unit = p.leading_term().coef / rest.leading_term().coef;

  // Monomial content.
  Monomial g = rest.terms().front().mono;
  for (const auto& t : rest.terms()) g = g.gcd(t.mono);
  if (!g.is_one()) {
    for (std::size_t k = 0; k < ring->size(); ++k) {
      unsigned e = ring->exponent(g, k);
      if (e > 0) result.factors.emplace_back(Polynomial::variable(ring, k), e);
    }
    Polynomial q(ring);
    std::vector<Polynomial::Term> terms;
    for (const auto& t : rest.terms())
      terms.push_back({g.quotient_of(t.mono), t.coef});
    rest = Polynomial::from_terms(ring, std::move(terms));
  }

  if (rest.total_degree() > 1) {
    for (const auto& cand : candidate_factors(ring, rest.support())) {
      if (cand.total_degree() >= rest.total_degree()) continue;
      unsigned mult = 0;
      Polynomial q(ring);
      while (rest.total_degree() > cand.total_degree() &&
             divides_exactly(cand, rest, &q)) {
        rest = q;
        ++mult;
      }
      if (mult > 0) {
        // rest may itself equal the candidate up to a unit.
        Polynomial pr = rest.primitive();
        if (pr == cand) {
          result.unit *= rest.leading_term().coef / pr.leading_term().coef;
          rest = Polynomial::constant(ring, 1);
          ++mult;
        }
        result.factors.emplace_back(cand, mult);
      }
      if (rest.total_degree() <= 1) break;
    }
  }
  if (!rest.is_constant()) {
    Polynomial pr = rest.primitive();
    result.unit *= rest.leading_term().coef / pr.leading_term().coef;
    bool merged = false;
    for (auto& [f, m] : result.factors)
      if (f == pr) {
        ++m;
        merged = true;
      }
    if (!merged) result.factors.emplace_back(pr, 1);
  } else {
    result.unit *= rest.constant_value();
  }
  return result;
}

std::string render_factored(const TrialFactorization& f) {
  std::string out;
  if (f.factors.empty()) return f.unit.get_str();
  if (f.unit == -1)
    out = "-";
  else if (f.unit != 1)
    out = f.unit.get_str() + "*";
  bool first = true;
  for (const auto& [poly, mult] : f.factors) {
    if (!first) out += "*";
    first = false;
    bool atomic = poly.size() == 1;
    out += atomic ? poly.to_string() : "(" + poly.to_string() + ")";
    if (mult > 1) out += "^" + std::to_string(mult);
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON: {vars:[...], terms:[{exps:[...], num, den}]}

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json j;
  j["vars"] = p.ring()->variables();
  auto terms = nlohmann::json::array();
  for (const auto& t : p.terms())
    terms.push_back({{"exps", p.ring()->exponents(t.mono)},
                     {"num", t.coef.get_num().get_str()},
                     {"den", t.coef.get_den().get_str()}});
  j["terms"] = terms;
  return j;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  RingPtr ring = Ring::make(j.at("vars").get<std::vector<std::string>>());
  std::vector<Polynomial::Term> terms;
  for (const auto& t : j.at("terms")) {
    auto exps = t.at("exps").get<std::vector<unsigned>>();
    Rational c(Integer(t.at("num").get<std::string>()),
               Integer(t.at("den").get<std::string>()));
    c.canonicalize();
    terms.push_back({ring->monomial(exps), c});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace opid
