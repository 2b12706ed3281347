#include <doctest.h>

#include "golden.hpp"
#include "opid/conmatrix.hpp"

using namespace opid;

TEST_CASE("every golden file carries provenance and parses") {
  std::size_t n = 0;
  for (const auto& entry : std::filesystem::directory_iterator(golden::dir())) {
    auto name = entry.path().filename().string();
    INFO(name);
    auto f = golden::read(name);
    CHECK_FALSE(f.provenance.empty());
    CHECK_FALSE(f.lines.empty());
    ++n;
  }
  CHECK(n == 15);
}

TEST_CASE("polynomial golden files canonicalise") {
  for (const char* name : {"case1_ib1_groebner_basis.txt", "case1_ib4_groebner_basis.txt",
                           "case2_groebner_basis.txt", "case2_residual_entries.txt",
                           "case4_groebner_basis.txt", "case4_residual_entries.txt"}) {
    INFO(name);
    auto list = golden::poly_list(name);
    for (const auto& p : list.polys) {
      CHECK_FALSE(p.is_zero());
      CHECK(Polynomial::parse(list.ring, p.to_string()) == p);
    }
  }
  CHECK(golden::poly_list("case1_ib4_groebner_basis.txt").polys.size() == 93);
  CHECK(golden::poly_list("case2_residual_entries.txt").polys.size() == 22);
  CHECK(golden::poly_list("case4_residual_entries.txt").polys.size() == 5);
  auto sections = golden::poly_sections("case3_groebner_bases.txt");
  CHECK(sections.size() == 3);
  CHECK(sections.at("3").polys.size() == 10);
}

TEST_CASE("matrix golden files have their declared shapes") {
  auto B1 = golden::semicolon_matrix("case1_residual_block.txt");
  CHECK(B1.rows() == 34);
  CHECK(B1.cols() == 4);
  auto B3 = golden::semicolon_matrix("case3_residual_block.txt");
  CHECK(B3.rows() == 24);
  auto R3 = Ring::make(coefficient_names(3));
  auto R6 = Ring::make(coefficient_names(6));
  CHECK(golden::dot_matrix("consequence_matrix_21.txt", R3).count_nonzero() == 60);
  CHECK(golden::dot_matrix("consequence_matrix_22_transposed.txt", R6).count_nonzero() == 120);
}

TEST_CASE("solution tables parse") {
  for (const auto& z : golden::zero_sets()) {
    INFO(z.name);
    CHECK_FALSE(z.rows.empty());
    for (const auto& row : z.rows) {
      auto bar = row.find('|');
      std::vector<std::string> params;
      if (bar != std::string::npos) params.push_back(golden::split(row.substr(bar + 1), ',')[0]);
      auto pt = parse_claim_point(row.substr(0, bar == std::string::npos ? row.size() : bar), params);
      CHECK(pt.coords.size() == 6);
    }
  }
}
