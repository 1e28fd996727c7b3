#include <doctest.h>

#include <algorithm>

#include "commvar/decomp.hpp"

using namespace commvar;

TEST_CASE("partition counts") {
  const int expected[] = {1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 1; n <= 8; ++n) CHECK(partitions(n).size() == static_cast<std::size_t>(expected[n - 1]));
  CHECK(partitions(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK_THROWS(validate_partition({2, 2}, 5));
  CHECK_THROWS(validate_partition({1, 2}, 3));
  CHECK(partition_label({2, 1}) == "[2,1]");
}

TEST_CASE("Jordan type representatives are nilpotent") {
  LieAlgebra g('A', 3);
  for (const auto& d : partitions(4)) {
    const auto rep = type_a_rep(g, d);
    CHECK(is_ad_nilpotent(rep.element));
    CHECK(rep.element.is_zero() == (d.size() == 4));
  }
}

TEST_CASE("B2 orbits") {
  LieAlgebra b2('B', 2);
  const auto reps = b2_reps(b2);
  REQUIRE(reps.size() == 4);
  std::vector<int> dims;
  for (const auto& r : reps) dims.push_back(centralizer_dim(r.element));
  CHECK(dims == std::vector<int>{10, 6, 4, 2});
  const auto list = factor_orbits(b2.roots().subsystem({0, 1}).factors.at(0));
  CHECK(list.complete);
  CHECK(list.orbits.size() == 4);
}

TEST_CASE("G2 lists only some of its orbits") {
  LieAlgebra g2('G', 2);
  const auto list = factor_orbits(g2.roots().subsystem({0, 1}).factors.at(0));
  CHECK_FALSE(list.complete);
  CHECK(centralizer_dim(g2_subregular(g2).element) == 4);
  bool complete = true;
  direct_sum_reps(g2, g2.roots().subsystem({0, 1}).factors, &complete);
  CHECK_FALSE(complete);
}

TEST_CASE("factors without orbit lists are unsupported") {
  LieAlgebra b3('B', 3);
  CHECK_THROWS_AS(direct_sum_reps(b3, b3.roots().subsystem({0, 1, 2}).factors), UnsupportedFactor);
  LieAlgebra d4('D', 4);
  CHECK_THROWS_AS(direct_sum_reps(d4, d4.roots().subsystem({0, 1, 2, 3}).factors), UnsupportedFactor);
}

TEST_CASE("zero representative for any factor") {
  LieAlgebra d4('D', 4);
  const auto rep = zero_rep(d4, d4.roots().subsystem({0, 1, 2, 3}).factors);
  CHECK(rep.element.is_zero());
}

TEST_CASE("direct sums of type A orbits") {
  LieAlgebra a3('A', 3);
  const auto reps = direct_sum_reps(a3, a3.roots().subsystem({0, 2}).factors);
  CHECK(reps.size() == 4);
}

TEST_CASE("Cartan elements for partitions with at least two parts") {
  for (int n = 2; n <= 6; ++n) {
    LieAlgebra g('A', n - 1);
    for (const auto& d : partitions(n)) {
      if (d.size() < 2) continue;
      CAPTURE(partition_label(d));
      const auto a = lemma_aaa_h(d);
      REQUIRE(a.size() == d.size());
      CHECK(std::is_sorted(a.begin(), a.end(), std::greater<>()));
      CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
      long s = 0;
      for (std::size_t i = 0; i < d.size(); ++i) s += d[i] * a[i];
      CHECK(s == 0);
      const LieElement h = lemma_aaa_element(g, d);
      const LieElement x = type_a_rep(g, d).element;
      CHECK(bracket(h, x).is_zero());
      CHECK(centralizer(centralizer(Subspace::whole(g), h), x).dim() == n - 1);
    }
  }
  CHECK_THROWS(lemma_aaa_h({3}));
}
