#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "commvar/exact.hpp"

using namespace commvar;

namespace {

IntMatrix random_int(std::mt19937_64& rng, std::size_t r, std::size_t c, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Rank as the size of the largest nonzero minor, by brute force.
std::size_t minor_rank(const IntMatrix& a) {
  const std::size_t top = std::min(a.rows(), a.cols());
  for (std::size_t k = top; k > 0; --k) {
    std::vector<bool> rsel(a.rows(), false), csel(a.cols(), false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        IntMatrix m(k, k);
        std::size_t ii = 0;
        for (std::size_t i = 0; i < a.rows(); ++i) {
          if (!rsel[i]) continue;
          std::size_t jj = 0;
          for (std::size_t j = 0; j < a.cols(); ++j)
            if (csel[j]) m(ii, jj++) = a(i, j);
          ++ii;
        }
        if (determinant(m) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

Integer cofactor_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix m(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != j) m(i - 1, kk++) = a(i, k);
    const Integer t = a(0, j) * cofactor_det(m);
    total += j % 2 == 0 ? t : Integer(-t);
  }
  return total;
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(rank(RatMatrix::from_rows(2, {{1, 2}, {2, 4}})) == 1);
  CHECK(rank(RatMatrix(3, 4)) == 0);
  CHECK(rank(RatMatrix::identity(5)) == 5);
  RatMatrix half = RatMatrix::from_rows(2, {{Rational(1, 2), Rational(1, 3)}, {Rational(3), Rational(2)}});
  CHECK(rank(half) == 1);
}

TEST_CASE("rank agrees with the largest nonzero minor") {
  std::mt19937_64 rng(0);
  for (int t = 0; t < 60; ++t) {
    IntMatrix a = random_int(rng, 4, 5, 2);
    if (t % 3 == 0)
      for (std::size_t j = 0; j < a.cols(); ++j) a(3, j) = a(0, j) - 2 * a(1, j);
    CHECK(rank(a) == minor_rank(a));
  }
}

TEST_CASE("rank is invariant under row and column permutations and transposition") {
  std::mt19937_64 rng(0);
  for (int t = 0; t < 200; ++t) {
    const IntMatrix b = random_int(rng, 5, 3, 3);
    const IntMatrix c = random_int(rng, 3, 7, 3);
    const IntMatrix a = b * c;
    std::vector<std::size_t> rp(5), cp(7);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    IntMatrix pa(5, 7);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 7; ++j) pa(i, j) = a(rp[i], cp[j]);
    const std::size_t r = rank(a);
    CHECK(r <= 3);
    CHECK(rank(pa) == r);
    CHECK(rank(a.transpose()) == r);
  }
}

TEST_CASE("kernel basis spans the null space") {
  std::mt19937_64 rng(0);
  for (int t = 0; t < 50; ++t) {
    const RatMatrix a = to_rational(random_int(rng, 3, 6, 3) * random_int(rng, 6, 6, 1));
    const auto ker = kernel_basis(a);
    CHECK(ker.size() == a.cols() - rank(a));
    for (const auto& v : ker) {
      const RatVector img = a * v;
      CHECK(std::all_of(img.begin(), img.end(), [](const Rational& q) { return q == 0; }));
    }
    if (!ker.empty()) CHECK(rank(RatMatrix::from_columns(a.cols(), ker)) == ker.size());
  }
}

TEST_CASE("solve finds solutions and detects inconsistency") {
  const RatMatrix a = RatMatrix::from_rows(2, {{1, 1}, {2, 2}});
  CHECK_FALSE(solve(a, {1, 3}).has_value());
  const auto x = solve(a, {1, 2});
  REQUIRE(x.has_value());
  CHECK((*x)[0] + (*x)[1] == 1);
}

TEST_CASE("Smith normal form of diag(2, 3) is diag(1, 6)") {
  const auto s = smith_normal_form(IntMatrix::from_rows(2, {{2, 0}, {0, 3}}));
  CHECK(s.diagonal() == std::vector<Integer>{1, 6});
}

TEST_CASE("Smith normal form of the torus relation matrix has invariant factors 1, 1") {
  const IntMatrix r = IntMatrix::from_rows(6, {{1, -1, 0, -1, 1, 0}, {1, 0, -1, -1, 0, 1}});
  CHECK(smith_normal_form(r).diagonal() == std::vector<Integer>{1, 1});
}

TEST_CASE("Smith normal form: U A V = D, unimodular transforms, divisibility") {
  std::mt19937_64 rng(0);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 5;
    const IntMatrix a = random_int(rng, r, c, 6);
    const auto s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
    for (std::size_t i = 0; i < s.d.rows(); ++i)
      for (std::size_t j = 0; j < s.d.cols(); ++j)
        if (i != j) CHECK(s.d(i, j) == 0);
    const auto d = s.diagonal();
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(d[i] >= 0);
      if (d[i] != 0) ++nonzero;
      if (i + 1 < d.size() && d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
    }
    CHECK(nonzero == rank(a));
    Integer g = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) g = gcd(g, a(i, j));
    if (!d.empty()) CHECK(d[0] == g);
    if (r == c) CHECK(abs(determinant(a)) == std::accumulate(d.begin(), d.end(), Integer(1), std::multiplies<>()));
  }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(0);
  for (int t = 0; t < 50; ++t) {
    const IntMatrix a = random_int(rng, 4, 4, 5);
    CHECK(determinant(a) == cofactor_det(a));
  }
}

TEST_CASE("unimodular inverse") {
  const IntMatrix u = IntMatrix::from_rows(2, {{2, 1}, {1, 1}});
  CHECK(u * unimodular_inverse(u) == IntMatrix::identity(2));
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix::from_rows(2, {{2, 0}, {0, 1}})), InvalidArgument);
}

TEST_CASE("Gaussian rational elimination") {
  const GaussRational i(0, 1);
  Matrix<GaussRational> m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = i;
  m(1, 0) = i;
  m(1, 1) = -1;
  CHECK(field_rank(m) == 1);
  m(1, 1) = 1;
  CHECK(field_rank(m) == 2);
  CHECK(i * i == GaussRational(-1));
  CHECK(GaussRational(3, 4) * GaussRational(3, 4).inverse() == GaussRational(1));
}

TEST_CASE("dimension from point counts") {
  std::vector<PrimeCount> sq{{5, 25}, {13, 169}, {17, 289}};
  auto e = dimension_from_counts(sq, DimensionMethod::modp_slope);
  CHECK(e.status == EstimateStatus::determined);
  CHECK(e.dim == 2);
  CHECK(e.slope == doctest::Approx(2.0));

  e = dimension_from_counts({{5, 0}, {13, 0}}, DimensionMethod::exhaustive_count);
  CHECK(e.status == EstimateStatus::empty);
  CHECK(e.dim == 0);

  e = dimension_from_counts({{5, 25}, {13, 169}}, DimensionMethod::modp_slope);
  CHECK(e.status == EstimateStatus::inconclusive);

  e = dimension_from_counts({{5, 25}, {13, 169}}, DimensionMethod::exhaustive_count);
  CHECK(e.status == EstimateStatus::determined);
  CHECK(e.dim == 2);

  e = dimension_from_counts({{5, 56}, {13, 609}, {17, 1192}}, DimensionMethod::modp_slope);
  CHECK(e.status == EstimateStatus::inconclusive);

  e = dimension_from_counts({{5, 0}, {13, 1}}, DimensionMethod::exhaustive_count);
  CHECK(e.status == EstimateStatus::inconclusive);
}

TEST_CASE("primitive vectors") {
  CHECK(primitive({Rational(1, 2), Rational(-3, 4)}) == RatVector{2, -3});
  CHECK(primitive({4, 6}) == RatVector{2, 3});
}
