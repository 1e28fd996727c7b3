#pragma once

// Linear algebra over the prime field F_p for small primes (p < 2^16).

#include <cstdint>
#include <vector>

#include "commvar/exact.hpp"

namespace commvar {

/// Dense matrix over F_p with entries in [0, p).
class FpMatrix {
 public:
  FpMatrix(unsigned p, std::size_t rows, std::size_t cols);

  /// Reduces a rational matrix; throws if some denominator is divisible by p.
  static FpMatrix reduce(const RatMatrix& a, unsigned p);

  [[nodiscard]] unsigned prime() const { return p_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  std::uint32_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] std::uint32_t* data() { return data_.data(); }

 private:
  unsigned p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

bool is_prime(unsigned n);

/// Reduction of a rational number mod p; throws on a denominator divisible by p.
std::uint32_t reduce_mod(const Rational& q, unsigned p);

/// Table of inverses mod p (index 0 unused).
std::vector<std::uint32_t> inverse_table(unsigned p);

/// Rank over F_p. Requires p >= 5.
std::size_t rank_mod_p(const FpMatrix& a);

/// Rank of a row-major rows x cols buffer, destroyed in the process.
/// `inv` must come from inverse_table(p).
std::size_t rank_mod_p_inplace(std::uint32_t* m, std::size_t rows, std::size_t cols, unsigned p,
                               const std::uint32_t* inv);

/// Basis of the right kernel over F_p.
std::vector<std::vector<std::uint32_t>> kernel_mod_p(const FpMatrix& a);

}  // namespace commvar
