#include <doctest.h>

#include <algorithm>

#include "golden.hpp"
#include "opid/conmatrix.hpp"

using namespace opid;

namespace {

std::vector<std::string> row_keys(const PolyMatrix& M) {
  std::vector<std::string> keys;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    std::string k;
    for (std::size_t j = 0; j < M.cols(); ++j) k += M.at(i, j).to_string() + "|";
    keys.push_back(k);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

TEST_CASE("multiplicity-1 matrix equals the published one up to row order") {
  auto C = build_consequence_matrix(2, 1);
  CHECK(C.matrix.rows() == 20);
  CHECK(C.matrix.cols() == 20);
  auto pub = golden::dot_matrix("consequence_matrix_21.txt", C.ring);
  CHECK(row_keys(C.matrix) == row_keys(pub));
}

TEST_CASE("multiplicity-2 matrix equals the published transpose up to row order") {
  auto C = build_consequence_matrix(2, 2);
  CHECK(C.matrix.rows() == 20);
  CHECK(C.matrix.cols() == 50);
  auto pub = golden::dot_matrix("consequence_matrix_22_transposed.txt", C.ring);
  REQUIRE(pub.rows() == 50);
  CHECK(row_keys(C.matrix) == row_keys(pub.transpose()));
}

TEST_CASE("first consequence row") {
  auto C = build_consequence_matrix(2, 1);
  CHECK(C.row_labels[0].label() == "(R o1 B) o1 L");
  std::vector<std::pair<std::size_t, std::string>> nz;
  for (std::size_t j = 0; j < 20; ++j)
    if (!C.matrix.at(0, j).is_zero()) nz.emplace_back(j + 1, C.matrix.at(0, j).to_string());
  CHECK(nz == std::vector<std::pair<std::size_t, std::string>>{{4, "a"}, {5, "b"}, {14, "c"}});
  CHECK(C.col_labels[3].render() == "L(L(*)**)");
  CHECK(C.col_labels[4].render() == "L(L(*)*)*");
  CHECK(C.col_labels[13].render() == "L(*)*L(*)");

  auto C2 = build_consequence_matrix(2, 2);
  std::vector<std::string> where;
  for (const char* v : {"a", "b", "c", "d", "e", "f"})
    for (std::size_t j = 0; j < 50; ++j)
      if (C2.matrix.at(0, j).to_string() == v) where.push_back(C2.col_labels[j].render());
  CHECK(where == std::vector<std::string>{"L(L(L(*)**))", "L(L(L(*)*)*)", "L(L(L(*)*))*",
                                          "L(L(*)*L(*))", "L(L(*)*)L(*)", "L(*)*L(L(*))"});
}

TEST_CASE("shape and sparsity") {
  for (unsigned q = 1; q <= 2; ++q) {
    auto C = build_consequence_matrix(2, q);
    CHECK(C.matrix.cols() == narayana(q + 4, 3));
    CHECK(C.coefficient_basis.size() == narayana(q + 2, 2));
    CHECK(C.ring->variables() == coefficient_names(C.coefficient_basis.size()));
    // each row holds each coefficient variable exactly once
    for (std::size_t i = 0; i < C.matrix.rows(); ++i) {
      std::vector<std::string> seen;
      for (std::size_t j = 0; j < C.matrix.cols(); ++j)
        if (!C.matrix.at(i, j).is_zero()) seen.push_back(C.matrix.at(i, j).to_string());
      std::sort(seen.begin(), seen.end());
      CHECK(seen == C.ring->variables());
    }
  }
}

TEST_CASE("single-coefficient specialisations give unit rows") {
  auto C = build_consequence_matrix(2, 2);
  for (std::size_t k = 0; k < C.ring->size(); ++k) {
    std::vector<Rational> v(C.ring->size(), 0);
    v[k] = 1;
    auto S = specialize(C, coefficient_point(C, v));
    for (std::size_t i = 0; i < S.rows(); ++i) {
      std::size_t nz = 0;
      for (std::size_t j = 0; j < S.cols(); ++j)
        if (!S.at(i, j).is_zero()) {
          ++nz;
          CHECK(S.at(i, j).constant_value() == 1);
        }
      CHECK(nz == 1);
    }
  }
}

TEST_CASE("specialisation ranks") {
  auto C1 = build_consequence_matrix(2, 1);
  auto S = specialize(C1, coefficient_point(C1, {1, -1, -1}));
  CHECK(rank(to_rational(S)) == 14);
  auto C2 = build_consequence_matrix(2, 2);
  CHECK(rank(to_rational(specialize(C2, coefficient_point(C2, {0, 1, 0, 1, -1, 0})))) == 19);
  CHECK(rank(to_rational(specialize(C2, coefficient_point(C2, {0, 0, 0, 0, 0, 0})))) == 0);
  CHECK_THROWS_AS(coefficient_point(C2, {1, 2}), std::invalid_argument);
}
