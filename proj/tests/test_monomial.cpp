#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "golden.hpp"
#include "opid/monomial.hpp"

using namespace opid;

namespace {

// All balanced strings with n pairs, by plain recursion.
std::vector<std::string> all_balanced(unsigned n) {
  std::vector<std::string> out;
  std::string cur;
  std::function<void(unsigned, unsigned)> go = [&](unsigned open, unsigned close) {
    if (open == n && close == n) {
      out.push_back(cur);
      return;
    }
    if (open < n) {
      cur.push_back('(');
      go(open + 1, close);
      cur.pop_back();
    }
    if (close < open) {
      cur.push_back(')');
      go(open, close + 1);
      cur.pop_back();
    }
  };
  go(0, 0);
  return out;
}

unsigned count_nestings(const std::string& s) {
  unsigned n = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) n += s[i] == '(' && s[i + 1] == ')';
  return n;
}

std::vector<std::string> brute_force(unsigned p, unsigned q) {
  std::vector<std::string> out;
  for (auto& s : all_balanced(p + q))
    if (count_nestings(s) == p) out.push_back(s);
  std::sort(out.begin(), out.end());  // '(' < ')', i.e. a < b
  return out;
}

}  // namespace

TEST_CASE("narayana numbers") {
  CHECK(narayana(3, 2) == 3);
  CHECK(narayana(4, 2) == 6);
  CHECK(narayana(1, 1) == 1);
  CHECK(narayana(6, 3) == 50);
  CHECK(narayana(60, 30) > Integer("1000000000000000000000"));
  CHECK_THROWS_AS(narayana(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(narayana(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(narayana(3, 0), std::invalid_argument);
}

TEST_CASE("enumeration matches a brute-force generator for p <= 5, q <= 4") {
  for (unsigned p = 1; p <= 5; ++p)
    for (unsigned q = 0; q <= 4; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      auto basis = enumerate_monomials(p, q);
      CHECK(Integer(basis.size()) == narayana(p + q, p));
      auto expected = brute_force(p, q);
      REQUIRE(basis.size() == expected.size());
      for (std::size_t k = 0; k < basis.size(); ++k) {
        CHECK(basis[k].paren() == expected[k]);
        CHECK(basis[k].degree() == p);
        CHECK(basis[k].multiplicity() == q);
      }
    }
  CHECK_THROWS_AS(enumerate_monomials(0, 1), std::invalid_argument);
}

TEST_CASE("small enumerations") {
  auto b21 = enumerate_monomials(2, 1);
  REQUIRE(b21.size() == 3);
  CHECK(b21[0].render() == "L(**)");
  CHECK(b21[1].render() == "L(*)*");
  CHECK(b21[2].render() == "*L(*)");
  auto b10 = enumerate_monomials(1, 0);
  REQUIRE(b10.size() == 1);
  CHECK(b10[0].render() == "*");
  CHECK(b10[0].render(RenderStyle::Letters) == "x");
}

TEST_CASE("degree-2 table for multiplicities 1 to 3") {
  auto f = golden::read("monomials_p2.txt");
  std::map<unsigned, std::vector<std::vector<std::string>>> rows;
  for (const auto& l : f.lines) {
    auto t = golden::tokens(l);
    rows[std::stoul(t[0])].push_back(t);
  }
  CHECK(rows[1].size() == 3);
  CHECK(rows[2].size() == 6);
  CHECK(rows[3].size() == 10);
  for (auto& [q, list] : rows) {
    auto basis = enumerate_monomials(2, q);
    REQUIRE(basis.size() == list.size());
    for (std::size_t k = 0; k < list.size(); ++k) {
      CHECK(std::stoul(list[k][1]) == k + 1);
      CHECK(basis[k].paren() == list[k][2]);
      CHECK(basis[k].render(RenderStyle::Letters) == list[k][3]);
    }
  }
}

TEST_CASE("bases of O(3,2) and O(3,3) in order") {
  for (auto [q, name, n] : {std::tuple{2u, "basis_3_2.txt", 20u}, std::tuple{3u, "basis_3_3.txt", 50u}}) {
    auto f = golden::read(name);
    auto basis = enumerate_monomials(3, q);
    REQUIRE(f.lines.size() == n);
    REQUIRE(basis.size() == n);
    for (std::size_t k = 0; k < n; ++k) {
      auto t = golden::tokens(f.lines[k]);
      CHECK(std::stoul(t[0]) == k + 1);
      CHECK(basis[k].paren() == t[1]);
      CHECK(basis[k].render() == t[2]);
    }
    CHECK(basis.front().render() == (q == 2 ? "L(L(***))" : "L(L(L(***)))"));
  }
  CHECK(enumerate_monomials(3, 2).back().render() == "**L(L(*))");
}

TEST_CASE("paren codec") {
  auto m = paren_to_monomial("(((())()())())()");
  CHECK(m.render() == "L(L(L(*)**)*)*");
  CHECK(m.render(RenderStyle::Letters) == "L(L(L(v)wx)y)z");
  CHECK(paren_to_monomial("(()())").render() == "L(**)");
  CHECK(paren_to_monomial("()").render() == "*");
  CHECK_THROWS_AS(paren_to_monomial("(()"), std::invalid_argument);
  CHECK_THROWS_AS(paren_to_monomial("())("), std::invalid_argument);
  CHECK_FALSE(is_balanced(")("));
  CHECK(nesting_count("(()())") == 2);
}

TEST_CASE("round trip on every balanced string with at most 7 pairs") {
  std::size_t n = 0;
  for (unsigned pairs = 1; pairs <= 7; ++pairs)
    for (const auto& s : all_balanced(pairs)) {
      auto m = paren_to_monomial(s);
      CHECK(monomial_to_paren(m) == s);
      CHECK(m.degree() == nesting_count(s));
      CHECK(m.degree() + m.multiplicity() == pairs);
      CHECK(OperatorMonomial::from_text(m.render()) == m);
      CHECK(OperatorMonomial::from_text(m.render(RenderStyle::Letters, true)) == m);
      ++n;
    }
  CHECK(n == 1 + 2 + 5 + 14 + 42 + 132 + 429);
}

TEST_CASE("rendering") {
  auto m = OperatorMonomial(MonomialNode::op(MonomialNode::product({MonomialNode::arg(), MonomialNode::arg()})));
  CHECK(m.render() == "L(**)");
  CHECK(m.render(RenderStyle::Letters) == "L(xy)");
  auto m2 = OperatorMonomial(MonomialNode::op(m.root()));
  CHECK(m2.render(RenderStyle::Letters) == "L(L(xy))");
  CHECK(m2.render(RenderStyle::Letters, true) == "L2(xy)");
  CHECK(OperatorMonomial().render() == "*");
  CHECK(OperatorMonomial().render(RenderStyle::Letters) == "x");
  CHECK(argument_letters(4) == std::vector<std::string>{"w", "x", "y", "z"});
  CHECK(argument_letters(6).front() == "x1");
  CHECK(OperatorMonomial::from_text("L2(xy)") == m2);
}

TEST_CASE("products are flattened") {
  auto nested = MonomialNode::product(
      {MonomialNode::arg(), MonomialNode::product({MonomialNode::arg(), MonomialNode::arg()})});
  CHECK(nested.children.size() == 3);
  auto m = OperatorMonomial::from_text("L(L(*)**)");
  CHECK(m.root().children.front().children.size() == 3);
}

TEST_CASE("order is a strict total order") {
  auto basis = enumerate_monomials(3, 3);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int t = 0; t < 500; ++t) {
    const auto& a = basis[pick(rng)];
    const auto& b = basis[pick(rng)];
    const auto& c = basis[pick(rng)];
    CHECK((a < b) + (b < a) + (a == b) == 1);
    if (a < b && b < c) CHECK(a < c);
  }
  CHECK(std::is_sorted(basis.begin(), basis.end()));
}
