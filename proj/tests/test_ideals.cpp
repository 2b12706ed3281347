#include <doctest.h>

#include "golden.hpp"
#include "opid/classify.hpp"
#include "random_poly.hpp"

using namespace opid;

namespace {

RingPtr bcdef() { return Ring::make({"b", "c", "d", "e", "f"}); }
Polynomial P(const RingPtr& r, const char* s) { return Polynomial::parse(r, s); }

// Determinantal ideals of the published case-1 block, computed once.
struct Case1 {
  PolyMatrix B = golden::semicolon_matrix("case1_residual_block.txt");
  std::vector<GroebnerBasis> gb;
  Case1() {
    for (std::size_t r = 1; r <= 4; ++r) gb.push_back(buchberger(Ideal(B.ring(), minors(B, r))));
  }
};
const Case1& case1() {
  static const Case1 c;
  return c;
}

}  // namespace

TEST_CASE("reduction") {
  auto R = bcdef();
  CHECK(reduce(P(R, "b^2+b"), {P(R, "b")}).is_zero());
  CHECK(reduce(P(R, "b^3+b^2"), {P(R, "b^2+b")}).is_zero());
  CHECK(reduce(P(R, "c^2"), {P(R, "c^2+c")}) == P(R, "-c"));
  auto r = reduce(P(R, "f^3 + b*c"), {P(R, "f^2+f"), P(R, "b")});
  CHECK(r == P(R, "f"));
}

TEST_CASE("division certificates reconstruct the input") {
  auto R = bcdef();
  std::mt19937_64 rng(21);
  const auto& G = case1().gb[1].basis;
  for (int t = 0; t < 40; ++t) {
    auto f = testutil::random_poly(rng, R, 5, 6);
    auto cert = divide_with_certificate(f, G);
    REQUIRE(cert.quotients.size() == G.size());
    Polynomial sum = cert.remainder;
    for (std::size_t i = 0; i < G.size(); ++i) sum += cert.quotients[i] * G[i];
    CHECK(sum == f);
    CHECK(cert.remainder == reduce(f, G));
    // no remainder term is divisible by a leading monomial
    for (const auto& term : cert.remainder.terms())
      for (const auto& g : G) CHECK_FALSE(g.leading_term().mono.divides(term.mono));
  }
}

TEST_CASE("first determinantal ideal of case a=1") {
  const auto& c = case1();
  auto R = c.B.ring();
  CHECK(Ideal(R, minors(c.B, 1)).size() == 43);
  auto expected = golden::poly_list("case1_ib1_groebner_basis.txt");
  std::vector<Polynomial> exp;
  for (auto& p : expected.polys) exp.push_back(change_ring(p, R));
  CHECK(golden::canonical_set(c.gb[0].basis) == golden::canonical_set(exp));
  std::vector<std::string> text;
  for (const auto& g : c.gb[0].basis) text.push_back(g.to_string());
  CHECK(text == std::vector<std::string>{"b", "d", "e", "c^2 + c", "f^2 + f"});
}

TEST_CASE("case a=0, b=1 ideal") {
  auto gens = golden::poly_list("case2_residual_entries.txt");
  CHECK(gens.polys.size() == 22);
  auto G = buchberger(Ideal(gens.ring, gens.polys));
  auto expected = golden::poly_list("case2_groebner_basis.txt");
  CHECK(G.basis.size() == 8);
  CHECK(golden::canonical_set(G.basis) == golden::canonical_set(expected.polys));
  auto R = gens.ring;
  std::vector<Polynomial> listed = {P(R, "f"), P(R, "c*d+c*e"), P(R, "d^2+d*e"), P(R, "c^3+c^2"),
                                    P(R, "c^2*d+c*d"), P(R, "c*d^2"), P(R, "d^3-d^2"), P(R, "e^3+e^2")};
  CHECK(golden::canonical_set(G.basis) == golden::canonical_set(listed));
  CHECK(radical_membership(P(R, "f"), Ideal(R, gens.polys)));
}

TEST_CASE("case a=b=c=0, d=1 ideal") {
  auto R = Ring::make({"e", "f"});
  Ideal I(R, {P(R, "e^2*(e+1)"), P(R, "f*e"), P(R, "-f*e"), P(R, "-f^2*(f+1)"), P(R, "-f*e*(1+2*f)")});
  CHECK(I.size() == 4);
  auto G = buchberger(I);
  CHECK(golden::canonical_set(G.basis) ==
        golden::canonical_set({P(R, "f*e"), P(R, "e^3+e^2"), P(R, "f^3+f^2")}));
  auto gold = golden::poly_list("case4_groebner_basis.txt");
  CHECK(golden::canonical_set(G.basis) == golden::canonical_set(gold.polys));
  CHECK(ideal_membership(P(R, "f*e"), G));
  CHECK(ideal_membership(P(R, "f*e^7 - 3*f^2*e"), G));
  CHECK_FALSE(ideal_membership(P(R, "e"), G));
}

TEST_CASE("case a=b=0, c=1 ideals") {
  auto block = golden::semicolon_matrix("case3_residual_block.txt");
  auto sections = golden::poly_sections("case3_groebner_bases.txt");
  for (std::size_t r = 1; r <= 3; ++r) {
    auto G = buchberger(Ideal(block.ring(), minors(block, r)));
    const auto& exp = sections.at(std::to_string(r));
    std::vector<Polynomial> conv;
    for (const auto& p : exp.polys) conv.push_back(change_ring(p, block.ring()));
    CHECK(golden::canonical_set(G.basis) == golden::canonical_set(conv));
  }
}

TEST_CASE("membership and radical membership") {
  const auto& c = case1();
  auto R = c.B.ring();
  CHECK_FALSE(ideal_membership(P(R, "1"), c.gb[0]));
  CHECK_FALSE(c.gb[0].is_unit());
  // b is not in I(B,2) itself but in its radical
  CHECK(radical_membership(P(R, "b"), c.gb[1]));
  for (const auto& g : c.gb[0].basis) CHECK(radical_membership(g, c.gb[1]));
  for (const auto& g : c.gb[1].basis) CHECK(ideal_membership(g, c.gb[0]));
  // a variable the ideal never mentions
  auto Rz = Ring::make({"b", "c", "d", "e", "f", "z"});
  std::vector<Polynomial> gens;
  for (const auto& g : c.gb[0].basis) gens.push_back(change_ring(g, Rz));
  CHECK_FALSE(radical_membership(P(Rz, "z"), Ideal(Rz, gens)));
  CHECK(radical_membership(P(Rz, "b*z"), Ideal(Rz, gens)));
}

TEST_CASE("fourth determinantal ideal of case a=1") {
  const auto& c = case1();
  auto R = c.B.ring();
  const auto& G4 = c.gb[3];
  CHECK(G4.basis.size() == 92);
  auto pub = golden::poly_list("case1_ib4_groebner_basis.txt");
  CHECK(pub.polys.size() == 93);
  for (const auto& p : pub.polys) CHECK(ideal_membership(change_ring(p, R), G4));
  // fed - fb does not vanish at the zero (b,c,d,e,f) = (-2,1,-2,2,1) of I(B,4),
  // so it is not a member
  CHECK_FALSE(ideal_membership(P(R, "f*e*d - f*b"), G4));
  RationalPoint z = {{"b", -2}, {"c", 1}, {"d", -2}, {"e", 2}, {"f", 1}};
  for (const auto& g : G4.basis) CHECK(evaluate(g, z) == 0);
  CHECK(evaluate(P(R, "f*e*d - f*b"), z) != 0);
}

TEST_CASE("Groebner bases pass the confluence audit") {
  const auto& c = case1();
  for (std::size_t r = 0; r < 3; ++r) CHECK(confluence_failures(c.gb[r]) == 0);
  for (std::size_t r = 0; r < 4; ++r) {
    auto gens = Ideal(c.B.ring(), minors(c.B, r + 1)).generators();
    for (std::size_t k = 0; k < gens.size(); k += 97) CHECK(ideal_membership(gens[k], c.gb[r]));
  }
}

TEST_CASE("reduced bases do not depend on pair tie-breaking") {
  const auto& c = case1();
  Ideal I(c.B.ring(), minors(c.B, 2));
  for (std::uint64_t seed : {1, 2, 3}) {
    GroebnerOptions o;
    o.tie_seed = seed;
    CHECK(buchberger(I, o).basis == c.gb[1].basis);
  }
  GroebnerOptions plain;
  plain.coprime_criterion = false;
  plain.chain_criterion = false;
  CHECK(buchberger(I, plain).basis == c.gb[1].basis);
}

TEST_CASE("reduced basis shape") {
  const auto& c = case1();
  for (const auto& G : c.gb) {
    for (std::size_t i = 0; i < G.basis.size(); ++i) {
      CHECK(G.basis[i].leading_term().coef == 1);
      if (i) CHECK(G.basis[i - 1].leading_term().mono < G.basis[i].leading_term().mono);
      for (std::size_t j = 0; j < G.basis.size(); ++j) {
        if (i == j) continue;
        for (const auto& t : G.basis[i].terms())
          CHECK_FALSE(G.basis[j].leading_term().mono.divides(t.mono));
      }
    }
  }
}

TEST_CASE("timeouts") {
  const auto& c = case1();
  GroebnerOptions o;
  o.timeout_seconds = 1e-9;
  CHECK_THROWS_AS(buchberger(Ideal(c.B.ring(), minors(c.B, 3)), o), GroebnerTimeout);
}

TEST_CASE("zero-set verification") {
  const auto& c = case1();
  auto R = c.B.ring();
  Ideal I1(R, c.gb[0].basis);
  ZeroSetClaim claim;
  for (const char* row : {"a=1,b=0,c=-1,d=0,e=0,f=-1", "a=1,b=0,c=-1,d=0,e=0,f=0",
                          "a=1,b=0,c=0,d=0,e=0,f=-1", "a=1,b=0,c=0,d=0,e=0,f=0"})
    claim.points.push_back(parse_claim_point(row));
  CHECK(verify_zero_set(I1, claim).all_pass());

  ZeroSetClaim bad;
  bad.points.push_back(parse_claim_point("a=1,b=0,c=-1,d=0,e=0,f=-2"));
  auto rep = verify_zero_set(I1, bad);
  CHECK_FALSE(rep.all_pass());
  CHECK(rep.points[0].witness == "f^2 + f");

  ZeroSetClaim fam;
  fam.points.push_back(parse_claim_point("a=1,b=0,c=0,d=d,e=0,f=-d-1", {"d"}));
  CHECK(verify_zero_set(Ideal(R, c.gb[3].basis), fam).all_pass());
  CHECK_FALSE(verify_zero_set(Ideal(R, c.gb[1].basis), fam).all_pass());

  // zero sets grow with the minor size
  for (std::size_t r = 1; r < 4; ++r) CHECK(verify_zero_set(Ideal(R, c.gb[r].basis), claim).all_pass());
}

TEST_CASE("generator normalisation") {
  auto R = bcdef();
  auto gens = normalize_generators({P(R, "-2*b"), P(R, "b"), P(R, "0"), P(R, "3*c^2+3*c")});
  CHECK(gens.size() == 2);
  CHECK(gens[0] == P(R, "b"));
  CHECK(gens[1] == P(R, "c^2+c"));
}
