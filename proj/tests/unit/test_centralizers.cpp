#include <doctest.h>

#include <random>

#include "commvar/decomp.hpp"

using namespace commvar;

TEST_CASE("centralizer dimensions of the rank two cases") {
  LieAlgebra a2('A', 2);
  CHECK(centralizer_dim(a2.x({1, 0})) == 4);
  LieAlgebra b2('B', 2);
  CHECK(centralizer_dim(b2.x({0, 1})) == 4);
  CHECK(centralizer_dim(b2.x({1, 0})) == 6);
  LieAlgebra g2('G', 2);
  CHECK(centralizer_dim(g2_subregular(g2).element) == 4);
}

TEST_CASE("sl2 + sl2 at (e, 0)") {
  LieAlgebra a3('A', 3);
  const LeviData levi = levi_data(a3, {0, 2});
  CHECK(levi.s_I.dim() == 6);
  const CentralizerAlgebra a(levi.s_I, 2, a3.x({1, 0, 0}));
  CHECK(a.dim() == 4);
  CHECK(generic_centralizer_dim(a) == 2);
}

TEST_CASE("sl_n centralizers match the partition formula") {
  for (int n = 2; n <= 5; ++n) {
    LieAlgebra g('A', n - 1);
    for (const auto& d : partitions(n)) {
      CAPTURE(partition_label(d));
      CHECK(centralizer_dim(type_a_rep(g, d).element) == sl_centralizer_dim_formula(d));
    }
  }
  CHECK(sl_centralizer_dim_formula({2, 1}) == 4);
  CHECK(sl_centralizer_dim_formula({2, 2}) == 7);
  CHECK(sl_centralizer_dim_formula({1, 1, 1}) == 8);
  CHECK(sl_centralizer_dim_formula({3}) == 2);
}

TEST_CASE("regular and irregular elements") {
  LieAlgebra b2('B', 2);
  CHECK(centralizer_dim(b2.zero()) == 10);
  CHECK(is_irregular(b2, b2.zero()));
  const LieElement reg = b2.x({1, 0}) + b2.x({0, 1});
  CHECK(centralizer_dim(reg) == 2);
  CHECK_FALSE(is_irregular(b2, reg));
  const LieElement h = Rational(3) * b2.h_simple(0) + Rational(5) * b2.h_simple(1);
  CHECK(centralizer_dim(h) == 2);
}

TEST_CASE("subspace operations") {
  LieAlgebra a2('A', 2);
  const Subspace h = Subspace::cartan(a2);
  const Subspace all = Subspace::whole(a2);
  CHECK(h.dim() == 2);
  CHECK(all.contains(h));
  CHECK(intersection(h, all) == h);
  const Subspace l(&a2, std::vector<LieElement>{a2.x({1, 0}), a2.x({1, 0}) + a2.h_simple(0)});
  CHECK(l.dim() == 2);
  CHECK(sum(h, l).dim() == 3);
  CHECK(intersection(h, l).dim() == 1);
  const Subspace c = centralizer(all, a2.x({1, 0}));
  CHECK(c.dim() == 4);
  for (int i = 0; i < c.dim(); ++i) CHECK(bracket(c.element(i), a2.x({1, 0})).is_zero());
}

TEST_CASE("rank of the differential of the commutator map") {
  for (auto [t, r] : {std::pair<char, int>{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}}) {
    LieAlgebra g(t, r);
    std::mt19937_64 rng(0);
    for (int s = 0; s < 20; ++s) {
      const LieElement a = random_element(g, rng, 3);
      const LieElement b = s % 2 ? random_element(g, rng, 3) : Rational(2) * a;
      const auto res = mu_rank_identity(a, b);
      CHECK(res.identities_hold);
      CHECK(res.rank_dmu == g.dim() - res.dim_joint_centralizer);
    }
  }
}

TEST_CASE("orbit closure dimension of Cartan subspaces") {
  LieAlgebra a2('A', 2);
  CHECK(orbit_closure_dim(Subspace::cartan(a2)) == 8);
  const Subspace line(&a2, std::vector<LieElement>{a2.h_simple(0) + Rational(2) * a2.h_simple(1)});
  CHECK(orbit_closure_dim(line) == 5);
}
