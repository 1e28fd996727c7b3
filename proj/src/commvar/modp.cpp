#include "commvar/modp.hpp"

#include <string>

namespace commvar {

FpMatrix::FpMatrix(unsigned p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (p < 5 || p >= (1u << 16) || !is_prime(p))
    throw InvalidArgument("FpMatrix: modulus must be a prime with 5 <= p < 65536, got " + std::to_string(p));
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t reduce_mod(const Rational& q, unsigned p) {
  const unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) throw InvalidArgument("denominator " + q.get_den().get_str() + " vanishes mod " + std::to_string(p));
  const unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  // den^(p-2) by square and multiply
  std::uint64_t inv = 1;
  std::uint64_t base = den;
  for (unsigned e = p - 2; e > 0; e >>= 1) {
    if (e & 1u) inv = inv * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(num * inv % p);
}

FpMatrix FpMatrix::reduce(const RatMatrix& a, unsigned p) {
  FpMatrix m(p, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = reduce_mod(a(i, j), p);
  return m;
}

std::vector<std::uint32_t> inverse_table(unsigned p) {
  std::vector<std::uint32_t> inv(p, 0);
  inv[1] = 1;
  for (unsigned i = 2; i < p; ++i) inv[i] = static_cast<std::uint32_t>(p - (p / i) * static_cast<std::uint64_t>(inv[p % i]) % p);
  return inv;
}

std::size_t rank_mod_p_inplace(std::uint32_t* m, std::size_t rows, std::size_t cols, unsigned p,
                               const std::uint32_t* inv) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    std::uint32_t* pr = m + piv * cols;
    if (piv != r) {
      std::uint32_t* rr = m + r * cols;
      for (std::size_t j = c; j < cols; ++j) std::swap(rr[j], pr[j]);
      pr = rr;
    }
    const std::uint32_t pinv = inv[pr[c]];
    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint32_t* ri = m + i * cols;
      if (ri[c] == 0) continue;
      const std::uint32_t f = p - static_cast<std::uint32_t>(static_cast<std::uint64_t>(ri[c]) * pinv % p);
      for (std::size_t j = c; j < cols; ++j) ri[j] = (ri[j] + f * pr[j]) % p;
    }
    ++r;
  }
  return r;
}

std::size_t rank_mod_p(const FpMatrix& a) {
  FpMatrix m = a;
  const auto inv = inverse_table(a.prime());
  return rank_mod_p_inplace(m.data(), m.rows(), m.cols(), m.prime(), inv.data());
}

std::vector<std::vector<std::uint32_t>> kernel_mod_p(const FpMatrix& a) {
  FpMatrix m = a;
  const unsigned p = a.prime();
  const auto inv = inverse_table(p);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    const std::uint32_t s = inv[m(r, c)];
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = static_cast<std::uint32_t>(std::uint64_t{m(r, j)} * s % p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const std::uint64_t f = p - m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = static_cast<std::uint32_t>((m(i, j) + f * m(r, j)) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = (p - m(k, f)) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace commvar
