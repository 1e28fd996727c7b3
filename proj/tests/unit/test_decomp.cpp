#include <doctest.h>

#include "commvar/decomp.hpp"

using namespace commvar;

TEST_CASE("Levi data") {
  LieAlgebra a3('A', 3);
  const LeviData l = levi_data(a3, {0, 2});
  CHECK(l.t_I.dim() == 1);
  CHECK(l.s_I.dim() == 6);
  CHECK(l.g_I.dim() == 7);
  CHECK(l.direct);
  for (int i = 0; i < l.t_I.dim(); ++i) {
    CHECK(a3.root_value(a3.roots().simple_index(0), l.t_I.element(i)) == 0);
    CHECK(a3.root_value(a3.roots().simple_index(2), l.t_I.element(i)) == 0);
  }
  LieAlgebra f4('F', 4);
  const LeviData b = levi_data(f4, {1, 2});
  CHECK(factor_signature(b.subsystem.factors) == "B2");
  CHECK(b.t_I.dim() == 2);
  CHECK(b.s_I.dim() == 10);
}

TEST_CASE("B2 class ledger") {
  LieAlgebra b2('B', 2);
  FactorCodimCache cache;
  const LeviData levi = levi_data(b2, {0, 1});
  std::vector<std::optional<int>> cs;
  for (const auto& rep : direct_sum_reps(b2, levi.subsystem.factors))
    cs.push_back(class_descriptor(b2, levi, rep, cache).c_value);
  CHECK(cs == std::vector<std::optional<int>>{5, 4, 3, std::nullopt});
  const LeviData a1 = levi_data(b2, {0});
  const auto reps = direct_sum_reps(b2, a1.subsystem.factors);
  REQUIRE(reps.size() == 2);
  const auto d = class_descriptor(b2, a1, reps[1], cache);
  CHECK(d.irregular);
  CHECK(d.c_value == 4);
  CHECK(d.dim_class == b2.dim() - d.dim_sIx);
}

TEST_CASE("c(I, 0) = 3 + |I|") {
  LieAlgebra b3('B', 3);
  FactorCodimCache cache;
  for (const auto& subset : std::vector<std::vector<int>>{{0}, {2}, {0, 2}, {1, 2}, {0, 1}}) {
    const LeviData l = levi_data(b3, subset);
    CHECK(c_value(b3, subset, zero_rep(b3, l.subsystem.factors), cache) == 3 + static_cast<int>(subset.size()));
  }
}

TEST_CASE("codimension of the irregular part in small rank") {
  CHECK(commvar_irr_codim(LieAlgebra('A', 1)).codim == 4);
  CHECK(commvar_irr_codim(LieAlgebra('A', 2)).codim == 4);
  CHECK(commvar_irr_codim(LieAlgebra('B', 2)).codim == 3);
  CHECK(commvar_irr_codim(LieAlgebra('C', 3)).codim == 3);
  const auto g2 = commvar_irr_codim(LieAlgebra('G', 2));
  CHECK(g2.codim == 2);
  CHECK(!g2.reason.empty());
}

TEST_CASE("Levi locus formula") {
  LieAlgebra a3('A', 3);
  const auto res = levi_locus_check(a3, {0, 1}, a3.x({1, 0, 0}));
  CHECK(res.holds);
  CHECK(res.lhs == res.rhs);
  LieAlgebra b3('B', 3);
  const auto sub = levi_locus_check(b3, {1, 2}, b3.x({0, 0, 1}));
  CHECK(sub.holds);
}

TEST_CASE("reductive algebras take the minimum over their simple ideals") {
  FactorCodimCache cache;
  CHECK(reductive_min({{'A', 2}, {'B', 2}}, 1, cache) == 3);
  CHECK(reductive_min({{'A', 1}, {'G', 2}}, 0, cache) == 2);
  CHECK(reductive_min({{'A', 3}}, 2, cache) == 4);
  CHECK_THROWS(reductive_min({}, 1, cache));
}

TEST_CASE("factor codimensions are cached by orbit") {
  LieAlgebra b2('B', 2);
  FactorCodimCache cache;
  const auto f = b2.roots().subsystem({0, 1}).factors.at(0);
  for (const auto& o : factor_orbits(f).orbits) {
    const auto c1 = cache.get(o);
    const auto c2 = cache.get(o);
    CHECK(c1.key == c2.key);
    CHECK(c1.codim == c2.codim);
  }
}
