#include <doctest.h>

#include <random>

#include "commvar/modp.hpp"

using namespace commvar;

TEST_CASE("primality and reduction") {
  CHECK(is_prime(5));
  CHECK(is_prime(17));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(reduce_mod(Rational(1, 2), 5) == 3);
  CHECK(reduce_mod(Rational(-1), 13) == 12);
  CHECK_THROWS(reduce_mod(Rational(1, 5), 5));
  const auto inv = inverse_table(13);
  for (unsigned a = 1; a < 13; ++a) CHECK(a * inv[a] % 13 == 1);
}

TEST_CASE("rank mod a large prime agrees with the rank over Q") {
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = 1 + t % 4;
    IntMatrix b(6, k), c(k, 5);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < k; ++j) b(i, j) = d(rng);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < 5; ++j) c(i, j) = d(rng);
    const RatMatrix a = to_rational(b * c);
    CHECK(rank_mod_p(FpMatrix::reduce(a, 65521)) == rank(a));
  }
}

TEST_CASE("rank mod p sees the characteristic") {
  const RatMatrix a = RatMatrix::from_rows(2, {{1, 2}, {3, 1}});
  CHECK(rank_mod_p(FpMatrix::reduce(a, 5)) == 1);
  CHECK(rank_mod_p(FpMatrix::reduce(a, 7)) == 2);
}

TEST_CASE("kernel mod p") {
  std::mt19937_64 rng(0);
  for (int t = 0; t < 50; ++t) {
    FpMatrix a(13, 3, 6);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 6; ++j) a(i, j) = static_cast<std::uint32_t>(rng() % 13);
    const auto ker = kernel_mod_p(a);
    CHECK(ker.size() == 6 - rank_mod_p(a));
    for (const auto& v : ker)
      for (std::size_t i = 0; i < 3; ++i) {
        unsigned long long s = 0;
        for (std::size_t j = 0; j < 6; ++j) s += static_cast<unsigned long long>(a(i, j)) * v[j];
        CHECK(s % 13 == 0);
      }
  }
}
