#include "commvar/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace commvar {

RatVector operator*(const RatMatrix& a, const RatVector& v) {
  if (a.cols() != v.size()) throw InvalidArgument("matrix-vector product: shape mismatch");
  RatVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (v[j] != 0) out[i] += a(i, j) * v[j];
  return out;
}

namespace {

// Bareiss elimination in place; returns the rank. Every division is exact.
std::size_t bareiss_rank(IntMatrix& m, Integer* det_out = nullptr) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Integer prev = 1;
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(piv, j));
      sign = -sign;
    }
    const Integer p = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer q = m(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = p * m(i, j) - q * m(r, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(t);
      }
      m(i, c) = 0;
    }
    prev = p;
    ++r;
  }
  if (det_out != nullptr) *det_out = (r == rows && rows == cols) ? Integer(sign * prev) : Integer(0);
  return r;
}

IntMatrix clear_denominators(const RatMatrix& a) {
  IntMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Rational s = a(i, j) * l;
      m(i, j) = s.get_num();
    }
  }
  return m;
}

}  // namespace

std::size_t rank(const IntMatrix& a) {
  IntMatrix m = a;
  return bareiss_rank(m);
}

std::size_t rank(const RatMatrix& a) {
  IntMatrix m = clear_denominators(a);
  return bareiss_rank(m);
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("determinant: matrix is not square");
  if (a.rows() == 0) return 1;
  IntMatrix m = a;
  Integer det;
  bareiss_rank(m, &det);
  return det;
}

std::vector<std::size_t> rref_in_place(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<RatVector> kernel_basis(const RatMatrix& a) {
  RatMatrix m = a;
  const auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(a.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw InvalidArgument("solve: right-hand side has wrong length");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, a.cols());
  return x;
}

RatVector primitive(const RatVector& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  Integer g = 0;
  for (const auto& q : v) {
    Rational s = q * l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  if (g == 0) return v;
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * l / g;
  return out;
}

GaussRational GaussRational::inverse() const {
  const Rational n = re * re + im * im;
  if (n == 0) throw InvalidArgument("division by zero in Q(i)");
  return {re / n, -im / n};
}

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_t -= q * row_s
void row_axpy(IntMatrix& m, std::size_t t, std::size_t s, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(t, j) -= q * m(s, j);
}

void col_axpy(IntMatrix& m, std::size_t t, std::size_t s, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, t) -= q * m(i, s);
}

}  // namespace

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  SmithForm s{IntMatrix::identity(rows), a, IntMatrix::identity(cols)};
  IntMatrix& d = s.d;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block goes to (t, t)
      std::size_t bi = rows;
      std::size_t bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (bi == rows || abs(d(i, j)) < abs(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) return s;
      swap_rows(d, t, bi);
      swap_rows(s.u, t, bi);
      swap_cols(d, t, bj);
      swap_cols(s.v, t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_axpy(d, i, t, q);
        row_axpy(s.u, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        col_axpy(d, j, t, q);
        col_axpy(s.v, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into row t and repeat
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_axpy(d, t, bad, Integer(-1));
      row_axpy(s.u, t, bad, Integer(-1));
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) s.u(t, j) = -s.u(t, j);
    }
  }
  return s;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  const Integer det = determinant(a);
  if (abs(det) != 1) throw InvalidArgument("unimodular_inverse: determinant is not +-1");
  const std::size_t n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  rref_in_place(aug);
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j).get_num();
  return inv;
}

// ---------------------------------------------------------------------------
// Dimension estimates

std::string to_string(DimensionMethod m) {
  switch (m) {
    case DimensionMethod::generic_rank: return "generic-rank";
    case DimensionMethod::modp_slope: return "modp-slope";
    case DimensionMethod::exhaustive_count: return "exhaustive-count";
  }
  return "?";
}

std::string to_string(EstimateStatus s) {
  switch (s) {
    case EstimateStatus::determined: return "determined";
    case EstimateStatus::upper_bound: return "upper-bound";
    case EstimateStatus::empty: return "empty";
    case EstimateStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

double loglog_slope(const std::vector<PrimeCount>& counts) {
  if (counts.size() < 2) throw InvalidArgument("slope fit needs at least two primes");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& c : counts) {
    if (c.count == 0) throw InvalidArgument("slope fit on a zero count");
    const double x = std::log(static_cast<double>(c.prime));
    const double y = std::log(static_cast<double>(c.count));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(counts.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

DimensionEstimate dimension_from_counts(std::vector<PrimeCount> counts, DimensionMethod method,
                                        double tolerance) {
  DimensionEstimate est;
  est.method = method;
  est.per_prime_counts = std::move(counts);
  const bool all_zero = std::all_of(est.per_prime_counts.begin(), est.per_prime_counts.end(),
                                    [](const PrimeCount& c) { return c.count == 0; });
  if (all_zero) {
    est.status = EstimateStatus::empty;
    est.dim = 0;
    return est;
  }
  if (std::any_of(est.per_prime_counts.begin(), est.per_prime_counts.end(),
                  [](const PrimeCount& c) { return c.count == 0; })) {
    est.status = EstimateStatus::inconclusive;
    est.notes = "empty over some but not all primes";
    return est;
  }
  est.slope = loglog_slope(est.per_prime_counts);
  if (method == DimensionMethod::modp_slope && est.per_prime_counts.size() < 3) {
    est.status = EstimateStatus::inconclusive;
    est.notes = "a slope estimate needs at least three primes";
    return est;
  }
  const double rounded = std::round(est.slope);  // halves go away from zero
  est.dim = static_cast<int>(rounded);
  if (std::fabs(est.slope - rounded) < tolerance) {
    est.status = EstimateStatus::determined;
  } else {
    est.status = EstimateStatus::inconclusive;
    std::ostringstream os;
    os << "slope " << est.slope << " not within " << tolerance << " of an integer";
    est.notes = os.str();
  }
  return est;
}

}  // namespace commvar
