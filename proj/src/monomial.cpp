#include "opid/monomial.hpp"

#include <cctype>
#include <stdexcept>

namespace opid {

Integer narayana(long i, long j) {
  if (i < 1 || j < 1 || j > i)
    throw std::invalid_argument("narayana: need 1 <= j <= i");
  Integer a, b;
  mpz_bin_uiui(a.get_mpz_t(), i, j);
  mpz_bin_uiui(b.get_mpz_t(), i, j - 1);
  Integer r = a * b;
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);
  return r;
}

bool is_balanced(std::string_view s) {
  long depth = 0;
  for (char ch : s) {
    if (ch == '(')
      ++depth;
    else if (ch == ')') {
      if (--depth < 0) return false;
    } else {
      return false;
    }
  }
  return depth == 0;
}

unsigned nesting_count(std::string_view s) {
  unsigned n = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == '(' && s[i + 1] == ')') ++n;
  return n;
}

MonomialNode MonomialNode::op(MonomialNode child) {
  MonomialNode n;
  n.kind = Kind::Op;
  n.children.push_back(std::move(child));
  return n;
}

MonomialNode MonomialNode::product(std::vector<MonomialNode> items) {
  std::vector<MonomialNode> flat;
  for (auto& it : items) {
    if (it.kind == Kind::Product)
      for (auto& c : it.children) flat.push_back(std::move(c));
    else
      flat.push_back(std::move(it));
  }
  if (flat.empty()) throw std::invalid_argument("empty product");
  if (flat.size() == 1) return std::move(flat[0]);
  MonomialNode n;
  n.kind = Kind::Product;
  n.children = std::move(flat);
  return n;
}

namespace {

using Kind = MonomialNode::Kind;

void paren_items(const MonomialNode& n, std::string& out);

void paren_node(const MonomialNode& n, std::string& out) {
  switch (n.kind) {
    case Kind::Arg:
      out += "()";
      break;
    case Kind::Op:
      out += '(';
      paren_items(n.children[0], out);
      out += ')';
      break;
    case Kind::Product:
      paren_items(n, out);
      break;
  }
}

void paren_items(const MonomialNode& n, std::string& out) {
  if (n.kind == Kind::Product)
    for (const auto& c : n.children) paren_node(c, out);
  else
    paren_node(n, out);
}

// Parses a sequence of groups starting at pos, up to an unmatched ')' or
// the end. Returns the product of the groups.
MonomialNode parse_groups(std::string_view s, std::size_t& pos) {
  std::vector<MonomialNode> items;
  while (pos < s.size() && s[pos] == '(') {
    ++pos;
    if (pos < s.size() && s[pos] == ')') {
      ++pos;
      items.push_back(MonomialNode::arg());
      continue;
    }
    MonomialNode inner = parse_groups(s, pos);
    if (pos >= s.size() || s[pos] != ')')
      throw std::invalid_argument("unbalanced parenthesis string");
    ++pos;
    items.push_back(MonomialNode::op(std::move(inner)));
  }
  if (items.empty()) throw std::invalid_argument("empty group");
  return MonomialNode::product(std::move(items));
}

void count(const MonomialNode& n, unsigned& p, unsigned& q) {
  if (n.kind == Kind::Arg) ++p;
  if (n.kind == Kind::Op) ++q;
  for (const auto& c : n.children) count(c, p, q);
}

MonomialNode normalize(const MonomialNode& n) {
  switch (n.kind) {
    case Kind::Arg:
      return n;
    case Kind::Op:
      return MonomialNode::op(normalize(n.children.at(0)));
    case Kind::Product: {
      std::vector<MonomialNode> items;
      for (const auto& c : n.children) items.push_back(normalize(c));
      return MonomialNode::product(std::move(items));
    }
  }
  return n;
}

struct Renderer {
  RenderStyle style;
  bool collapse;
  std::vector<std::string> letters;
  std::size_t next = 0;

  void node(const MonomialNode& n, std::string& out) {
    switch (n.kind) {
      case Kind::Arg:
        out += style == RenderStyle::Star ? std::string("*") : letters[next];
        ++next;
        break;
      case Kind::Op: {
        const MonomialNode* inner = &n.children[0];
        unsigned power = 1;
        if (collapse)
          while (inner->kind == Kind::Op) {
            ++power;
            inner = &inner->children[0];
          }
        out += 'L';
        if (power > 1) out += std::to_string(power);
        out += '(';
        node(*inner, out);
        out += ')';
        break;
      }
      case Kind::Product:
        for (const auto& c : n.children) node(c, out);
        break;
    }
  }
};

struct TextParser {
  std::string_view s;
  std::size_t pos = 0;

  MonomialNode items() {
    std::vector<MonomialNode> out;
    while (pos < s.size() && s[pos] != ')') {
      char ch = s[pos];
      if (ch == 'L') {
        ++pos;
        unsigned power = 1;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          power = 0;
          while (pos < s.size() &&
                 std::isdigit(static_cast<unsigned char>(s[pos])))
            power = power * 10 + static_cast<unsigned>(s[pos++] - '0');
        }
        if (power == 0 || pos >= s.size() || s[pos] != '(')
          throw std::invalid_argument("expected '(' after L");
        ++pos;
        MonomialNode inner = items();
        if (pos >= s.size() || s[pos] != ')')
          throw std::invalid_argument("missing ')'");
        ++pos;
        for (unsigned k = 0; k < power; ++k)
          inner = MonomialNode::op(std::move(inner));
        out.push_back(std::move(inner));
      } else if (ch == '*' || std::islower(static_cast<unsigned char>(ch))) {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
          ++pos;
        out.push_back(MonomialNode::arg());
      } else {
        throw std::invalid_argument("unexpected character in monomial: " +
                                    std::string(1, ch));
      }
    }
    if (out.empty()) throw std::invalid_argument("empty monomial");
    return MonomialNode::product(std::move(out));
  }
};

}  // namespace

OperatorMonomial::OperatorMonomial(MonomialNode root)
    : root_(normalize(root)) {
  paren_items(root_, paren_);
  count(root_, degree_, mult_);
}

OperatorMonomial OperatorMonomial::from_paren(std::string_view s) {
  if (!is_balanced(s) || s.empty())
    throw std::invalid_argument("unbalanced parenthesis string");
  std::size_t pos = 0;
  MonomialNode root = parse_groups(s, pos);
  if (pos != s.size())
    throw std::invalid_argument("unbalanced parenthesis string");
  return OperatorMonomial(std::move(root));
}

OperatorMonomial OperatorMonomial::from_text(std::string_view s) {
  TextParser p{s};
  MonomialNode root = p.items();
  if (p.pos != s.size()) throw std::invalid_argument("unbalanced monomial");
  return OperatorMonomial(std::move(root));
}

std::string OperatorMonomial::render(RenderStyle style,
                                     bool collapse_powers) const {
  Renderer r{style, collapse_powers, argument_letters(degree_)};
  std::string out;
  r.node(root_, out);
  return out;
}

ParenString monomial_to_paren(const OperatorMonomial& m) { return m.paren(); }

OperatorMonomial paren_to_monomial(std::string_view s) {
  return OperatorMonomial::from_paren(s);
}

std::vector<std::string> argument_letters(unsigned p) {
  static const char* kLetters = "vwxyz";
  std::vector<std::string> out;
  if (p <= 3) {
    for (unsigned i = 0; i < p; ++i) out.emplace_back(1, kLetters[2 + i]);
  } else if (p <= 5) {
    for (unsigned i = 0; i < p; ++i) out.emplace_back(1, kLetters[5 - p + i]);
  } else {
    for (unsigned i = 1; i <= p; ++i) out.push_back("x" + std::to_string(i));
  }
  return out;
}

std::vector<OperatorMonomial> enumerate_monomials(unsigned p, unsigned q) {
  if (p < 1) throw std::invalid_argument("degree must be at least 1");
  const unsigned n = p + q;
  std::vector<OperatorMonomial> out;
  std::string s;
  s.reserve(2 * n);
  // Depth-first with '(' first yields dictionary order directly. `nest`
  // counts completed "()" pairs so far.
  auto rec = [&](auto&& self, unsigned open, unsigned close,
                 unsigned nest) -> void {
    if (nest > p) return;
    if (close == n) {
      if (nest == p) out.push_back(OperatorMonomial::from_paren(s));
      return;
    }
    if (open < n) {
      s.push_back('(');
      self(self, open + 1, close, nest);
      s.pop_back();
    }
    if (close < open) {
      bool pair = s.back() == '(';
      s.push_back(')');
      self(self, open, close + 1, nest + (pair ? 1 : 0));
      s.pop_back();
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

}  // namespace opid
