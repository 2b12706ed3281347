#include <doctest.h>

#include <functional>

#include "golden.hpp"
#include "opid/classify.hpp"
#include "random_poly.hpp"

using namespace opid;

namespace {

Polynomial cofactor_det(const PolyMatrix& M) {
  std::size_t n = M.rows();
  if (n == 1) return M.at(0, 0);
  Polynomial sum(M.ring());
  for (std::size_t j = 0; j < n; ++j) {
    if (M.at(0, j).is_zero()) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    Polynomial term = M.at(0, j) * cofactor_det(M.submatrix(rows, cols));
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

PolyMatrix apply_all(PolyMatrix M, const PartialSmithForm& psf) {
  for (const auto& op : psf.ops) apply(M, op);
  return M;
}

bool has_constant(const PolyMatrix& M) {
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (!M.at(i, j).is_zero() && M.at(i, j).is_constant()) return true;
  return false;
}

}  // namespace

TEST_CASE("partial Smith form of the multiplicity-1 case a=1") {
  auto C = build_consequence_matrix(2, 1);
  auto cs = cases(C);
  PolyMatrix M = C.matrix.substitute(cs[0].pinned);
  auto psf = partial_smith_form(M);
  CHECK(psf.identity_size == 14);
  CHECK(psf.residual.rows() == 6);
  CHECK(psf.residual.cols() == 6);
  CHECK_FALSE(has_constant(psf.residual));
  CHECK(apply_all(M, psf) == psf.block_form(M.rows(), M.cols()));

  // Row space of the residual is spanned by three rows in b^2+b and c^2+c.
  auto R = M.ring();
  auto u = Polynomial::parse(R, "b^2+b"), v = Polynomial::parse(R, "-c^2-c");
  PolyMatrix S(R, 3, 6);
  S.at(0, 0) = u; S.at(0, 5) = v;
  S.at(1, 0) = v; S.at(1, 3) = u;
  S.at(2, 1) = u; S.at(2, 4) = v;
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto pt = testutil::random_point(rng, {"a", "b", "c"});
    pt["a"] = 1;
    auto B = to_rational(psf.residual.substitute(pt));
    auto Srat = to_rational(S.substitute(pt));
    CHECK(rank(B) == 3);
    auto both = B;
    both.insert(both.end(), Srat.begin(), Srat.end());
    CHECK(rank(both) == 3);
  }
}

TEST_CASE("partial Smith form of the multiplicity-2 case a=1") {
  auto C = build_consequence_matrix(2, 2);
  auto res = case_residual(C, cases(C)[0]);
  CHECK(res.psf.identity_size == 16);
  CHECK(res.residual.rows() == 34);
  CHECK(res.residual.cols() == 4);
  CHECK_FALSE(has_constant(res.residual));
  CHECK(res.residual.ring()->variables() == std::vector<std::string>{"b", "c", "d", "e", "f"});
  PolyMatrix Mt = C.matrix.transpose().substitute(cases(C)[0].pinned);
  CHECK(apply_all(Mt, res.psf) == res.psf.block_form(Mt.rows(), Mt.cols()));

  // Same rank as the published block at random points.
  auto pub = golden::semicolon_matrix("case1_residual_block.txt");
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    auto pt = testutil::random_point(rng, {"b", "c", "d", "e", "f"}, 3, 2);
    CHECK(rank_at(res.residual, pt) == rank_at(pub, pt));
  }
}

TEST_CASE("partial Smith form of a constant invertible matrix") {
  auto R = Ring::make({"x"});
  PolyMatrix M(R, 3, 3);
  int vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M.at(i, j) = Polynomial::constant(R, vals[i][j]);
  auto psf = partial_smith_form(M);
  CHECK(psf.identity_size == 3);
  CHECK(psf.residual.rows() == 0);
  CHECK(apply_all(M, psf) == psf.block_form(3, 3));
}

TEST_CASE("partial Smith form is sound at random points") {
  std::mt19937_64 rng(8);
  for (unsigned q = 1; q <= 2; ++q) {
    auto C = build_consequence_matrix(2, q);
    for (const auto& cs : cases(C)) {
      if (cs.free.empty()) continue;
      auto res = case_residual(C, cs);
      for (int t = 0; t < 50; ++t) {
        auto pt = testutil::random_point(rng, cs.free);
        RationalPoint full = pt;
        for (const auto& [v, x] : cs.pinned) full[v] = x;
        CHECK(rank_at(C.matrix, full) == res.psf.identity_size + rank_at(res.residual, pt));
      }
    }
  }
}

TEST_CASE("minors") {
  auto R = Ring::make({"a", "b", "c", "d"});
  PolyMatrix M(R, 2, 2);
  M.at(0, 0) = Polynomial::variable(R, "a");
  M.at(0, 1) = Polynomial::variable(R, "b");
  M.at(1, 0) = Polynomial::variable(R, "c");
  M.at(1, 1) = Polynomial::variable(R, "d");
  auto m2 = minors(M, 2);
  REQUIRE(m2.size() == 1);
  CHECK(m2[0] == Polynomial::parse(R, "a*d-b*c"));
  CHECK(minors(M, 1).size() == 4);
  CHECK_THROWS_AS(minors(M, 3), std::out_of_range);
  CHECK_THROWS_AS(minors(M, 0), std::out_of_range);
}

TEST_CASE("minors agree with cofactor expansion") {
  auto R = Ring::make({"x", "y", "z"});
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) {
    PolyMatrix M(R, 5, 4);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (rng() % 3) M.at(i, j) = testutil::random_poly(rng, R, 2, 3);
    auto m3 = minors(M, 3);
    std::size_t k = 0;
    for (std::size_t r0 = 0; r0 < 5; ++r0)
      for (std::size_t r1 = r0 + 1; r1 < 5; ++r1)
        for (std::size_t r2 = r1 + 1; r2 < 5; ++r2)
          for (std::size_t c0 = 0; c0 < 4; ++c0)
            for (std::size_t c1 = c0 + 1; c1 < 4; ++c1)
              for (std::size_t c2 = c1 + 1; c2 < 4; ++c2)
                CHECK(m3.at(k++) == cofactor_det(M.submatrix({r0, r1, r2}, {c0, c1, c2})));
    CHECK(k == m3.size());
  }
}

TEST_CASE("determinant is multilinear and matches cofactors") {
  auto R = Ring::make({"x", "y"});
  std::mt19937_64 rng(10);
  for (int t = 0; t < 10; ++t) {
    PolyMatrix M(R, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) M.at(i, j) = testutil::random_poly(rng, R, 2, 3);
    auto d = determinant(M);
    CHECK(d == cofactor_det(M));
    // linear in row 2
    PolyMatrix A = M, B = M;
    for (std::size_t j = 0; j < 4; ++j) B.at(2, j) = testutil::random_poly(rng, R, 2, 3);
    PolyMatrix S = M;
    for (std::size_t j = 0; j < 4; ++j) S.at(2, j) = A.at(2, j) + B.at(2, j);
    CHECK(determinant(S) == determinant(A) + determinant(B));
    PolyMatrix T = M;
    std::swap(T.at(0, 0), T.at(1, 0));
    for (std::size_t j = 1; j < 4; ++j) std::swap(T.at(0, j), T.at(1, j));
    CHECK(determinant(T) == -d);
  }
}

TEST_CASE("largest nonzero minor equals rank") {
  auto C = build_consequence_matrix(2, 1);
  std::mt19937_64 rng(15);
  for (int t = 0; t < 6; ++t) {
    RationalPoint pt;
    // mix generic and low-rank points
    if (t % 2) pt = {{"a", 1}, {"b", -(t % 3 == 1)}, {"c", 0}};
    else pt = testutil::random_point(rng, {"a", "b", "c"});
    PolyMatrix S = C.matrix.substitute(pt);
    std::size_t r = rank_at(C.matrix, pt);
    // a nonzero r-minor exists; all (r+1)-minors vanish (checked on a
    // reduced matrix of r+1 independent-looking rows to keep it cheap)
    auto rat = to_rational(S);
    std::vector<std::size_t> rows;
    RationalMatrix acc;
    for (std::size_t i = 0; i < rat.size(); ++i) {
      acc.push_back(rat[i]);
      if (rank(acc) > rows.size()) rows.push_back(i);
      else acc.pop_back();
    }
    REQUIRE(rows.size() == r);
    std::vector<std::size_t> all_cols(S.cols());
    for (std::size_t j = 0; j < S.cols(); ++j) all_cols[j] = j;
    auto sub = S.submatrix(rows, all_cols);
    bool nonzero = false;
    for (const auto& m : minors(sub, r)) nonzero |= !m.is_zero();
    CHECK(nonzero);
    if (r < S.rows()) {
      for (std::size_t extra = 0; extra < S.rows(); ++extra) {
        if (std::find(rows.begin(), rows.end(), extra) != rows.end()) continue;
        auto rr = rows;
        rr.push_back(extra);
        std::sort(rr.begin(), rr.end());
        for (const auto& m : minors(S.submatrix(rr, all_cols), r + 1)) CHECK(m.is_zero());
        break;
      }
    }
  }
}

TEST_CASE("zero sets of determinantal ideals are nested") {
  auto B = golden::semicolon_matrix("case1_residual_block.txt");
  std::vector<std::vector<Polynomial>> ideals;
  for (std::size_t r = 1; r <= 4; ++r) ideals.push_back(minor_census(B, r).distinct);
  std::vector<RationalPoint> pts = {
      {{"b", 0}, {"c", -1}, {"d", 0}, {"e", 0}, {"f", 0}},
      {{"b", 0}, {"c", 0}, {"d", 1}, {"e", 0}, {"f", 1}},
      {{"b", -2}, {"c", 1}, {"d", -2}, {"e", 2}, {"f", 1}},
      {{"b", 1}, {"c", 2}, {"d", 3}, {"e", 4}, {"f", 5}},
  };
  std::mt19937_64 rng(16);
  for (int t = 0; t < 10; ++t) pts.push_back(testutil::random_point(rng, {"b", "c", "d", "e", "f"}, 2, 1));
  for (const auto& pt : pts) {
    bool vanish_prev = false;
    for (const auto& I : ideals) {
      bool vanish = std::all_of(I.begin(), I.end(), [&](const Polynomial& g) { return evaluate(g, pt) == 0; });
      // Z(r) is contained in Z(r+1)
      CHECK((!vanish_prev || vanish));
      vanish_prev = vanish;
    }
  }
}

TEST_CASE("census of the published residual block") {
  auto B = golden::semicolon_matrix("case1_residual_block.txt");
  auto c1 = minor_census(B, 1, MinorDedup::Exact);
  CHECK(c1.raw == 136);
  auto c2 = minor_census(B, 2, MinorDedup::UpToSign);
  CHECK(c2.raw == 3366);
  CHECK(c2.min_degree == 2);
  CHECK(c2.max_degree == 6);
  CHECK(minor_census(B, 2, MinorDedup::Exact).distinct.size() >= c2.distinct.size());
}

TEST_CASE("rank at points") {
  auto C = build_consequence_matrix(2, 1);
  CHECK(rank_at(C.matrix, {{"a", 1}, {"b", -1}, {"c", -1}}) == 14);
  CHECK(rank_at(C.matrix, {{"a", 1}, {"b", 2}, {"c", 3}}) == 17);
  CHECK(rank_at(C.matrix, {{"a", 0}, {"b", 0}, {"c", 0}}) == 0);
  CHECK_THROWS_AS(rank_at(C.matrix, {{"a", 1}}), std::invalid_argument);
  auto C2 = build_consequence_matrix(2, 2);
  auto pr = rank_at(C2.matrix, {{"a", 1}, {"b", 0}, {"c", 0}, {"e", 0}, {"f", 0}}, "d");
  CHECK(pr.generic_rank == 20);
  // d-family: f = -d-1 needs a substitution in the parameter ring
  auto T = Ring::make({"d"});
  auto d = Polynomial::variable(T, "d");
  std::map<std::string, Polynomial> img = {
      {"a", Polynomial::constant(T, 1)}, {"b", Polynomial(T)}, {"c", Polynomial(T)},
      {"d", d}, {"e", Polynomial(T)}, {"f", -d - Polynomial::constant(T, 1)}};
  PolyMatrix M(T, C2.matrix.rows(), C2.matrix.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) M.at(i, j) = compose(C2.matrix.at(i, j), img, T);
  auto fam = rank_at(M, {}, "d");
  CHECK(fam.generic_rank == 19);
  CHECK(divides_exactly(Polynomial::variable(T, "d"), fam.exceptional));
  REQUIRE(fam.drops.size() >= 1);
  CHECK(fam.drops.front().first == 0);
  CHECK(fam.drops.front().second == 16);
}

TEST_CASE("univariate Smith form") {
  auto C = build_consequence_matrix(2, 2);
  auto cs = cases(C)[4];
  auto sf = univariate_smith_form(C.matrix.transpose().substitute(cs.pinned), "f");
  REQUIRE(sf.diagonal.size() == 20);
  for (std::size_t k = 0; k < 19; ++k) CHECK(sf.diagonal[k].is_constant());
  CHECK(sf.diagonal[19].to_string() == "f");
  auto R = Ring::make({"t"});
  auto roots = rational_roots(Polynomial::parse(R, "2*t^3 - t^2 - 2*t + 1"));
  CHECK(roots == std::vector<Rational>{-1, make_rational(1, 2), 1});
  CHECK(rational_roots(Polynomial::parse(R, "t^2+1")).empty());
}

TEST_CASE("matrix JSON round trip") {
  auto C = build_consequence_matrix(2, 1);
  auto j = C.matrix.to_json();
  CHECK(j["rows"] == 20);
  CHECK(PolyMatrix::from_json(j, C.ring) == C.matrix);
  CHECK(C.matrix.count_nonzero() == 60);
}
