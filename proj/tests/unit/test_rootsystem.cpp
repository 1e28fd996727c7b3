#include <doctest.h>

#include <set>

#include "commvar/decomp.hpp"
#include "commvar/rootsystem.hpp"

using namespace commvar;

TEST_CASE("numbers of positive roots, lacety and length classes") {
  struct Row {
    char t;
    int r;
    int positive;
    int lacety;
  };
  const Row rows[] = {{'A', 1, 1, 1},  {'A', 4, 10, 1}, {'B', 2, 4, 2},  {'B', 3, 9, 2},  {'C', 3, 9, 2},
                      {'C', 4, 16, 2}, {'D', 4, 12, 1}, {'D', 5, 20, 1}, {'E', 6, 36, 1}, {'E', 7, 63, 1},
                      {'E', 8, 120, 1}, {'F', 4, 24, 2}, {'G', 2, 6, 3}};
  for (const auto& row : rows) {
    CAPTURE(row.t);
    CAPTURE(row.r);
    const RootSystem rs(row.t, row.r);
    CHECK(rs.num_positive() == row.positive);
    CHECK(rs.lacety() == row.lacety);
    CHECK(rs.root_length_classes() == (row.lacety == 1 ? 1 : 2));
    CHECK(weyl_orbit_count(rs) == rs.root_length_classes());
  }
}

TEST_CASE("invalid types are rejected") {
  CHECK(validate_type('A', 0) != "");
  CHECK(validate_type('B', 1) != "");
  CHECK(validate_type('D', 2) != "");
  CHECK(validate_type('D', 3) == "");
  CHECK(validate_type('E', 9) != "");
  CHECK(validate_type('F', 5) != "");
  CHECK(validate_type('H', 3) != "");
  CHECK(validate_type('G', 2) == "");
  CHECK_THROWS_AS(RootSystem('D', 2), InvalidArgument);
}

TEST_CASE("C2 is built as B2") {
  const RootSystem rs('C', 2);
  CHECK(rs.label() == "B2");
  CHECK(rs.requested_label() == "C2");
}

TEST_CASE("Cartan matrices") {
  CHECK(RootSystem('G', 2).cartan_matrix() == std::vector<std::vector<int>>{{2, -3}, {-1, 2}});
  CHECK(RootSystem('B', 2).cartan_matrix() == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
  const auto a3 = RootSystem('A', 3).cartan_matrix();
  CHECK(a3[0][1] == -1);
  CHECK(a3[0][2] == 0);
}

TEST_CASE("root system axioms") {
  for (auto [t, r] : {std::pair<char, int>{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'F', 4}, {'G', 2}, {'E', 6}}) {
    const RootSystem rs(t, r);
    for (int a = 0; a < rs.num_roots(); ++a) {
      const auto& ra = rs.roots()[a];
      CHECK(rs.index_of(ra) == a);
      const int na = rs.negative_of(a);
      for (int i = 0; i < r; ++i) CHECK(rs.roots()[na][i] == -ra[i]);
      CHECK(rs.inner(ra, ra) % 2 == 0);
      for (int i = 0; i < r; ++i) {
        RootVec reflected = ra;
        reflected[i] -= rs.pairing(ra, i);
        CHECK(rs.index_of(reflected) >= 0);
      }
    }
  }
}

TEST_CASE("subdiagram classification") {
  const RootSystem e6('E', 6);
  CHECK(factor_signature(e6.classify({0, 2, 3})) == "A3");
  CHECK(factor_signature(e6.classify({1, 2, 3, 4})) == "D4");
  const RootSystem f4('F', 4);
  CHECK(factor_signature(f4.classify({1, 2})) == "B2");
  CHECK(factor_signature(f4.classify({0, 3})) == "A1+A1");
  const RootSystem b3('B', 3);
  const auto sub = b3.subsystem({1, 2});
  CHECK(sub.roots.size() == 8);
  CHECK(sub.positive.size() == 4);
}
