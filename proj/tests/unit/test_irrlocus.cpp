#include <doctest.h>

#include <random>

#include "commvar/decomp.hpp"
#include "commvar/verify.hpp"

using namespace commvar;

namespace {

LocusOptions exhaustive(std::vector<unsigned> primes) {
  LocusOptions o;
  o.mode = CountMode::exhaustive;
  o.primes = std::move(primes);
  return o;
}

}  // namespace

TEST_CASE("sl3 at X_a1: the irregular set is the line through x") {
  LieAlgebra a2('A', 2);
  const CentralizerAlgebra a(Subspace::whole(a2), 2, a2.x({1, 0}));
  CHECK(a.dim() == 4);
  CHECK(exact_point_count(a, 5) == 5);
  CHECK(reduced_point_count(a, 5) == 5);
  const auto est = irregular_locus_dim(a, exhaustive({5, 13}));
  CHECK(est.status == EstimateStatus::determined);
  CHECK(est.dim == 1);
}

TEST_CASE("G2 at the subregular element: every point is irregular") {
  LieAlgebra g2('G', 2);
  const CentralizerAlgebra a(Subspace::whole(g2), 2, g2_subregular(g2).element);
  CHECK(exact_point_count(a, 5) == 625);
  CHECK(generic_centralizer_dim(a) == 3);
}

TEST_CASE("so5 at the subregular X_a2") {
  LieAlgebra b2('B', 2);
  const CentralizerAlgebra a(Subspace::whole(b2), 2, b2.x({0, 1}));
  const auto est = irregular_locus_dim(a, exhaustive({5, 13, 17}));
  CHECK(est.status == EstimateStatus::determined);
  CHECK(a.dim() - est.dim == 1);
  CHECK(generic_centralizer_dim(a) == 2);
}

TEST_CASE("so5 at the minimal X_a1: point counts and the listed spans") {
  LieAlgebra b2('B', 2);
  const CentralizerAlgebra a(Subspace::whole(b2), 2, b2.x({1, 0}));
  REQUIRE(a.dim() == 6);
  // Independent brute force in a 5x5 matrix model of so5 (tests/oracles).
  CHECK(exact_point_count(a, 5) == 725);
  CHECK(reduced_point_count(a, 5) == 725);
  CHECK(reduced_point_count(a, 13) == 30589);

  const auto spans = so5_listed_spans(b2);
  CHECK(union_count_mod_p(spans, 5) == kSo5SpanUnion5);
  CHECK(union_count_mod_p(spans, 13) == kSo5SpanUnion13);
  const bool contained[] = {false, true, true, true, false, false};
  for (std::size_t s = 0; s < spans.size(); ++s) {
    CAPTURE(s + 1);
    CHECK(verify_linear_component(a, spans[s], 50, s) == contained[s]);
  }
}

TEST_CASE("a random 4-dimensional subspace does not lie in I(a_x)") {
  LieAlgebra b2('B', 2);
  const CentralizerAlgebra a(Subspace::whole(b2), 2, b2.x({1, 0}));
  std::mt19937_64 rng(0);
  std::vector<GaussVector> span;
  for (int k = 0; k < 4; ++k) {
    const RatVector v = random_point(a.space(), rng);
    span.emplace_back(v.begin(), v.end());
  }
  CHECK_FALSE(verify_linear_component(a, span, 50, 0));
}

TEST_CASE("I(a_x) is a cone") {
  struct Case {
    char t;
    int r;
    RootVec root;
  };
  for (const auto& c : {Case{'A', 2, {1, 0}}, Case{'B', 2, {1, 0}}, Case{'B', 2, {0, 1}}}) {
    LieAlgebra g(c.t, c.r);
    const CentralizerAlgebra a(Subspace::whole(g), c.r, g.x(c.root));
    std::mt19937_64 rng(0);
    for (int s = 0; s < 200; ++s) {
      RatVector y(a.dim());
      for (auto& v : y) v = static_cast<long>(rng() % 3) - 1;
      const bool irr = a.irregular_at(y);
      for (const Rational& lambda : {Rational(2), Rational(-1), Rational(1, 3)}) {
        RatVector ly = y;
        for (auto& v : ly) v *= lambda;
        CHECK(a.irregular_at(ly) == irr);
      }
    }
  }
}

TEST_CASE("regular x has an empty irregular set") {
  LieAlgebra b2('B', 2);
  const CentralizerAlgebra a(Subspace::whole(b2), 2, b2.x({1, 0}) + b2.x({0, 1}));
  const auto est = irregular_locus_dim(a);
  CHECK(est.status == EstimateStatus::empty);
  CHECK(est.dim == 0);
}

TEST_CASE("x = 0: the irregular locus of g has codimension 3") {
  for (auto [t, r] : {std::pair<char, int>{'A', 2}, {'B', 2}, {'G', 2}}) {
    LieAlgebra g(t, r);
    const CentralizerAlgebra a(Subspace::whole(g), r, g.zero());
    const auto est = irregular_locus_dim(a);
    CHECK(est.status == EstimateStatus::determined);
    CHECK(est.dim == g.dim() - 3);
  }
  LieAlgebra b3('B', 3);
  for (int i = 0; i < 3; ++i) CHECK(sheet_dim_generic(b3, b3.roots().simple_index(i), 2, 0) == b3.dim() - 3);
}

TEST_CASE("square roots of -1") {
  CHECK(sqrt_minus_one(5) == 2);
  CHECK(sqrt_minus_one(13) == 5);
  CHECK(sqrt_minus_one(17) == 4);
  CHECK_THROWS(sqrt_minus_one(7));
}

TEST_CASE("parallel and serial counts agree") {
  LieAlgebra b2('B', 2);
  const CentralizerAlgebra a(Subspace::whole(b2), 2, b2.x({0, 1}));
  CHECK(exact_point_count(a, 5, 1) == exact_point_count(a, 5, 4));
}
