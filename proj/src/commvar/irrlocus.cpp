#include "commvar/irrlocus.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "commvar/parallel.hpp"

namespace commvar {

// ---------------------------------------------------------------------------
// CentralizerAlgebra

CentralizerAlgebra::CentralizerAlgebra(const Subspace& ambient, int ambient_rank, const LieElement& x)
    : x_(ambient.algebra(), x.dense()), rk_(ambient_rank) {
  const LieAlgebra* g = ambient.algebra();
  whole_ = ambient.dim() == g->dim();
  const Subspace raw = centralizer(ambient, x_);
  d_ = raw.dim();

  RatMatrix rows = RatMatrix::from_rows(g->dim(), raw.basis());
  pivots_ = [&] {
    auto p = rref_in_place(rows);
    return std::vector<std::size_t>(p.begin(), p.end());
  }();
  std::vector<RatVector> basis;
  for (int k = 0; k < d_; ++k) {
    RatVector v(g->dim());
    for (int j = 0; j < g->dim(); ++j) v[j] = rows(k, j);
    basis.push_back(std::move(v));
  }
  space_ = Subspace::from_independent(g, std::move(basis));

  c_.assign(static_cast<std::size_t>(d_) * d_ * d_, 0);
  for (int i = 0; i < d_; ++i)
    for (int j = i + 1; j < d_; ++j) {
      const RatVector b = bracket_dense(*g, space_.basis()[i], space_.basis()[j]);
      const RatVector co = coordinates(b);
      for (int k = 0; k < d_; ++k) {
        c_[(i * d_ + j) * d_ + k] = co[k];
        c_[(j * d_ + i) * d_ + k] = -co[k];
      }
    }

  // z with sum_i z_i c_ij^k = 0 for all j, k
  if (d_ > 0) {
    RatMatrix sys(static_cast<std::size_t>(d_) * d_, d_);
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j)
        for (int k = 0; k < d_; ++k) sys(j * d_ + k, i) = constant(i, j, k);
    const auto z = kernel_basis(sys);
    std::vector<bool> pivot(d_, false);
    if (!z.empty()) {
      RatMatrix zr = RatMatrix::from_rows(d_, z);
      const auto zp = rref_in_place(zr);
      for (std::size_t k = 0; k < zp.size(); ++k) {
        pivot[zp[k]] = true;
        RatVector v(d_);
        for (int j = 0; j < d_; ++j) v[j] = zr(k, j);
        center_.push_back(std::move(v));
      }
    }
    for (int i = 0; i < d_; ++i)
      if (!pivot[i]) complement_.push_back(i);
  }
}

RatVector CentralizerAlgebra::coordinates(const RatVector& v) const {
  RatVector c(d_);
  for (int k = 0; k < d_; ++k) c[k] = v[pivots_[k]];
  if (space_.combine(c) != v) throw InvalidArgument("vector is not in the centralizer");
  return c;
}

std::vector<GaussRational> CentralizerAlgebra::coordinates(const std::vector<GaussRational>& v) const {
  std::vector<GaussRational> c(d_);
  for (int k = 0; k < d_; ++k) c[k] = v[pivots_[k]];
  for (std::size_t j = 0; j < v.size(); ++j) {
    GaussRational s;
    for (int k = 0; k < d_; ++k)
      if (space_.basis()[k][j] != 0) s += c[k] * GaussRational(space_.basis()[k][j]);
    if (!(s == v[j])) throw InvalidArgument("vector is not in the centralizer");
  }
  return c;
}

RatMatrix CentralizerAlgebra::ad_matrix(const RatVector& y) const {
  RatMatrix m(d_, d_);
  for (int i = 0; i < d_; ++i) {
    if (y[i] == 0) continue;
    for (int j = 0; j < d_; ++j)
      for (int k = 0; k < d_; ++k) {
        const Rational& c = constant(i, j, k);
        if (c != 0) m(k, j) += y[i] * c;
      }
  }
  return m;
}

int CentralizerAlgebra::centralizer_dim(const RatVector& coords) const {
  return d_ - static_cast<int>(rank(ad_matrix(coords)));
}

bool CentralizerAlgebra::irregular_at(const RatVector& coords) const { return centralizer_dim(coords) > rk_; }

bool CentralizerAlgebra::irregular_at(const std::vector<GaussRational>& y) const {
  Matrix<GaussRational> m(d_, d_);
  for (int i = 0; i < d_; ++i) {
    if (y[i].is_zero()) continue;
    for (int j = 0; j < d_; ++j)
      for (int k = 0; k < d_; ++k) {
        const Rational& c = constant(i, j, k);
        if (c != 0) m(k, j) += y[i] * GaussRational(c);
      }
  }
  return d_ - static_cast<int>(field_rank(m)) > rk_;
}

std::vector<std::vector<std::uint32_t>> CentralizerAlgebra::reduced_ad(unsigned p) const {
  std::vector<std::vector<std::uint32_t>> out(d_, std::vector<std::uint32_t>(static_cast<std::size_t>(d_) * d_));
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j)
      for (int k = 0; k < d_; ++k) out[i][k * d_ + j] = reduce_mod(constant(i, j, k), p);
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

unsigned long long ipow(unsigned long long b, int e) {
  unsigned long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// True when rank(m) < target; m is destroyed.
bool rank_below(std::uint32_t* m, int d, unsigned p, const std::uint32_t* inv, int target) {
  int r = 0;
  for (int c = 0; c < d && r < d; ++c) {
    int piv = r;
    while (piv < d && m[piv * d + c] == 0) ++piv;
    if (piv == d) continue;
    std::uint32_t* pr = m + piv * d;
    if (piv != r) {
      std::uint32_t* rr = m + r * d;
      for (int j = c; j < d; ++j) std::swap(rr[j], pr[j]);
      pr = rr;
    }
    if (++r >= target) return false;
    const std::uint32_t pinv = inv[pr[c]];
    for (int i = r; i < d; ++i) {
      std::uint32_t* ri = m + i * d;
      if (ri[c] == 0) continue;
      const std::uint32_t f = p - static_cast<std::uint32_t>(std::uint64_t{ri[c]} * pinv % p);
      for (int j = c; j < d; ++j) ri[j] = (ri[j] + f * pr[j]) % p;
    }
  }
  return r < target;
}

struct Block {
  std::vector<std::uint32_t> base;
  std::vector<int> free;
};

// Number of points base + sum_{i in free} c_i A_i (c_i in F_p) with rank below target.
unsigned long long count_block(const Block& blk, const std::vector<std::vector<std::uint32_t>>& A, int d, unsigned p,
                               const std::uint32_t* inv, int target) {
  const std::size_t sz = static_cast<std::size_t>(d) * d;
  std::vector<std::uint32_t> m = blk.base;
  std::vector<std::uint32_t> scratch(sz);
  std::vector<unsigned> digit(blk.free.size(), 0);
  unsigned long long hits = 0;
  for (;;) {
    std::copy(m.begin(), m.end(), scratch.begin());
    if (rank_below(scratch.data(), d, p, inv, target)) ++hits;
    std::size_t i = 0;
    for (; i < blk.free.size(); ++i) {
      const auto& a = A[blk.free[i]];
      for (std::size_t t = 0; t < sz; ++t) {
        std::uint32_t v = m[t] + a[t];
        m[t] = v >= p ? v - p : v;
      }
      if (++digit[i] < p) break;
      digit[i] = 0;
    }
    if (i == blk.free.size()) break;
  }
  return hits;
}

unsigned long long run_blocks(const std::vector<Block>& blocks, const std::vector<std::vector<std::uint32_t>>& A,
                              int d, unsigned p, int target, unsigned workers) {
  const auto inv = inverse_table(p);
  std::vector<unsigned long long> partial(blocks.size(), 0);
  parallel_for(
      blocks.size(), [&](std::size_t b) { partial[b] = count_block(blocks[b], A, d, p, inv.data(), target); },
      workers);
  unsigned long long total = 0;
  for (auto v : partial) total += v;
  return total;
}

void add_scaled(std::vector<std::uint32_t>& m, const std::vector<std::uint32_t>& a, unsigned s, unsigned p) {
  for (std::size_t t = 0; t < m.size(); ++t) m[t] = static_cast<std::uint32_t>((m[t] + std::uint64_t{s} * a[t]) % p);
}

void check_prime(unsigned p) {
  if (p < 5 || !is_prime(p)) throw InvalidArgument("point counts need a prime p >= 5, got " + std::to_string(p));
}

}  // namespace

bool exhaustive_feasible(const CentralizerAlgebra& a, unsigned p) {
  if (a.dim() > 7) return false;
  return ipow(p, a.dim()) <= kCountBudget;
}

bool reduced_feasible(const CentralizerAlgebra& a, unsigned p) {
  const int n = static_cast<int>(a.complement().size());
  return n == 0 || (ipow(p, n) - 1) / (p - 1) <= kCountBudget;
}

unsigned long long exact_point_count(const CentralizerAlgebra& a, unsigned p, unsigned workers) {
  check_prime(p);
  const int d = a.dim();
  if (!exhaustive_feasible(a, p))
    throw InvalidArgument("exhaustive count over budget: dim a_x = " + std::to_string(d) + ", p = " + std::to_string(p));
  const int target = d - a.ambient_rank();  // irregular iff rank < target
  if (target <= 0) return 0;
  const auto A = a.reduced_ad(p);
  std::vector<Block> blocks;
  const std::size_t sz = static_cast<std::size_t>(d) * d;
  std::vector<int> free;
  for (int i = 0; i + 1 < d; ++i) free.push_back(i);
  for (unsigned v = 0; v < p; ++v) {
    Block b{std::vector<std::uint32_t>(sz, 0), free};
    add_scaled(b.base, A[d - 1], v, p);
    blocks.push_back(std::move(b));
  }
  return run_blocks(blocks, A, d, p, target, workers);
}

unsigned long long reduced_point_count(const CentralizerAlgebra& a, unsigned p, unsigned workers) {
  check_prime(p);
  const int d = a.dim();
  const int target = d - a.ambient_rank();
  if (target <= 0) return 0;
  if (!reduced_feasible(a, p)) throw InvalidArgument("reduced count over budget at p = " + std::to_string(p));
  const auto A = a.reduced_ad(p);
  const auto& F = a.complement();
  const int n = static_cast<int>(F.size());
  const int k = d - n;
  std::vector<Block> blocks;
  for (int lead = 0; lead < n; ++lead) {
    std::vector<int> free(F.begin() + lead + 1, F.end());
    if (free.empty()) {
      Block b{A[F[lead]], {}};
      blocks.push_back(std::move(b));
      continue;
    }
    const int last = free.back();
    free.pop_back();
    for (unsigned v = 0; v < p; ++v) {
      Block b{A[F[lead]], free};
      add_scaled(b.base, A[last], v, p);
      blocks.push_back(std::move(b));
    }
  }
  const unsigned long long projective = run_blocks(blocks, A, d, p, target, workers);
  return ipow(p, k) * (1 + (p - 1) * projective);
}

// ---------------------------------------------------------------------------
// Dimension

int generic_centralizer_dim(const CentralizerAlgebra& a, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  int best = a.dim();
  for (int s = 0; s < samples; ++s) {
    RatVector y(a.dim());
    for (auto& v : y) v = dist(rng);
    best = std::min(best, a.centralizer_dim(y));
  }
  return best;
}

int sheet_dim_generic(const LieAlgebra& g, int root, int samples, std::uint64_t seed) {
  const int r = g.rank();
  RatMatrix functional(1, r);
  for (int i = 0; i < r; ++i) functional(0, i) = g.roots().pairing(g.roots().roots()[root], i);
  const auto ker = kernel_basis(functional);
  std::mt19937_64 rng(seed);
  int best = 0;
  const int neg = g.roots().negative_of(root);
  for (int s = 0; s < samples; ++s) {
    // t must be regular in Ker alpha: no other root may vanish on it.
    LieElement t = g.zero();
    for (int attempt = 0;; ++attempt) {
      const int range = 5 + attempt;
      t = g.zero();
      for (const auto& v : ker) {
        const int c = std::uniform_int_distribution<int>(-range, range)(rng);
        for (int i = 0; i < r; ++i) t.add(g.h_index(i), c * v[i]);
      }
      bool generic = true;
      for (int b = 0; b < g.roots().num_roots() && generic; ++b)
        if (b != root && b != neg && g.root_value(b, t) == 0) generic = false;
      if (generic) break;
    }
    const RatMatrix ad = ad_matrix(t);
    RatMatrix m(g.dim(), g.dim() + ker.size());
    for (int i = 0; i < g.dim(); ++i)
      for (int j = 0; j < g.dim(); ++j) m(i, j) = ad(i, j);
    for (std::size_t k = 0; k < ker.size(); ++k)
      for (int i = 0; i < r; ++i) m(i, g.dim() + k) = ker[k][i];
    best = std::max(best, static_cast<int>(rank(m)));
  }
  return best;
}

namespace {

DimensionEstimate zero_locus(const CentralizerAlgebra& a, const LocusOptions& opts) {
  const LieAlgebra& g = a.algebra();
  const RootSystem& rs = g.roots();
  DimensionEstimate est;
  est.method = DimensionMethod::generic_rank;
  std::set<int> lengths;
  std::ostringstream notes;
  int best = 0;
  for (int k = 0; k < rs.num_positive(); ++k) {
    const int len = rs.inner(rs.roots()[k], rs.roots()[k]);
    if (!lengths.insert(len).second) continue;
    const int dimk = sheet_dim_generic(g, k, 5, opts.seed + k);
    best = std::max(best, dimk);
    notes << "sheet of root length " << len << ": dim " << dimk << "; ";
  }
  notes << "other decomposition classes have dim s(I)_x >= |I| + 2 >= 4";
  est.dim = best;
  est.notes = notes.str();
  return est;
}

DimensionEstimate bounded_by_witness(const CentralizerAlgebra& a, const LocusOptions& opts) {
  DimensionEstimate est;
  est.method = DimensionMethod::generic_rank;
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int s = 0; s < 200; ++s) {
    RatVector y(a.dim());
    for (auto& v : y) v = dist(rng);
    if (!a.irregular_at(y)) {
      est.status = EstimateStatus::upper_bound;
      est.dim = a.dim() - 1;
      est.notes = "counting over budget; a point of a_x regular in a_x bounds dim I by dim a_x - 1";
      return est;
    }
  }
  est.status = EstimateStatus::inconclusive;
  est.dim = a.dim();
  est.notes = "counting over budget and no regular point of a_x was sampled";
  return est;
}

}  // namespace

DimensionEstimate irregular_locus_dim(const CentralizerAlgebra& a, const LocusOptions& opts) {
  if (a.dim() <= a.ambient_rank()) {
    DimensionEstimate est;
    est.status = EstimateStatus::empty;
    est.notes = "x is regular, so I(a_x) is empty";
    return est;
  }
  if (a.x().is_zero() && a.ambient_is_whole() && opts.mode == CountMode::automatic) return zero_locus(a, opts);

  auto all = [&](bool (*pred)(const CentralizerAlgebra&, unsigned)) {
    return std::all_of(opts.primes.begin(), opts.primes.end(), [&](unsigned p) { return pred(a, p); });
  };
  CountMode mode = opts.mode;
  if (mode == CountMode::automatic) {
    if (all(exhaustive_feasible))
      mode = CountMode::exhaustive;
    else if (all(reduced_feasible))
      mode = CountMode::reduced;
    else
      return bounded_by_witness(a, opts);
  }
  std::vector<PrimeCount> counts;
  for (unsigned p : opts.primes) {
    const auto n = mode == CountMode::exhaustive ? exact_point_count(a, p, opts.workers)
                                                 : reduced_point_count(a, p, opts.workers);
    counts.push_back({p, n});
  }
  // Reduced counts are exact values of N_p, obtained through the symmetries of the locus.
  auto est = dimension_from_counts(std::move(counts), DimensionMethod::exhaustive_count);
  if (mode == CountMode::reduced) est.notes += (est.notes.empty() ? "" : "; ") + std::string("counts reduced by the center and scaling");
  return est;
}

// ---------------------------------------------------------------------------
// Linear components

bool verify_linear_component(const CentralizerAlgebra& a, const std::vector<GaussVector>& span, int samples,
                             std::uint64_t seed) {
  if (span.empty()) return a.dim() > a.ambient_rank();
  const std::size_t m = span.front().size();
  std::vector<std::vector<GaussRational>> coords;
  for (const auto& v : span) {
    if (v.size() != m) throw InvalidArgument("verify_linear_component: ragged span");
    coords.push_back(a.coordinates(v));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int s = 0; s < samples; ++s) {
    std::vector<GaussRational> y(a.dim());
    for (const auto& c : coords) {
      const GaussRational lambda(dist(rng));
      for (int k = 0; k < a.dim(); ++k) y[k] += lambda * c[k];
    }
    if (!a.irregular_at(y)) return false;
  }
  return true;
}

unsigned sqrt_minus_one(unsigned p) {
  for (unsigned r = 1; r < p; ++r)
    if (std::uint64_t{r} * r % p == p - 1) return r;
  throw InvalidArgument("-1 is not a square mod " + std::to_string(p));
}

namespace {

using FpVec = std::vector<std::uint32_t>;

std::vector<FpVec> fp_basis(std::vector<FpVec> rows, unsigned p) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  FpMatrix m(p, rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  const auto inv = inverse_table(p);
  std::vector<FpVec> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(m(r, j), m(piv, j));
    const std::uint32_t s = inv[m(r, c)];
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const std::uint64_t f = p - std::uint64_t{m(i, c)} * s % p;
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<std::uint32_t>((m(i, j) + f * m(r, j)) % p);
    }
    ++r;
  }
  for (std::size_t i = 0; i < r; ++i) {
    FpVec v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = m(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<FpVec> fp_intersection(const std::vector<FpVec>& u, const std::vector<FpVec>& v, unsigned p) {
  if (u.empty() || v.empty()) return {};
  const std::size_t n = u.front().size();
  FpMatrix m(p, n, u.size() + v.size());
  for (std::size_t k = 0; k < u.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) m(i, k) = u[k][i];
  for (std::size_t k = 0; k < v.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) m(i, u.size() + k) = (p - v[k][i]) % p;
  std::vector<FpVec> out;
  for (const auto& kv : kernel_mod_p(m)) {
    FpVec w(n, 0);
    for (std::size_t k = 0; k < u.size(); ++k)
      for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<std::uint32_t>((w[i] + std::uint64_t{kv[k]} * u[k][i]) % p);
    out.push_back(std::move(w));
  }
  return fp_basis(out, p);
}

}  // namespace

unsigned long long union_count_mod_p(const std::vector<std::vector<GaussVector>>& spans, unsigned p) {
  check_prime(p);
  const std::uint64_t root = sqrt_minus_one(p);
  std::vector<std::vector<FpVec>> red;
  for (const auto& span : spans) {
    std::vector<FpVec> rows;
    for (const auto& v : span) {
      FpVec w(v.size());
      for (std::size_t i = 0; i < v.size(); ++i)
        w[i] = static_cast<std::uint32_t>((reduce_mod(v[i].re, p) + root * reduce_mod(v[i].im, p)) % p);
      rows.push_back(std::move(w));
    }
    red.push_back(fp_basis(rows, p));
  }
  const std::size_t n = red.size();
  long long total = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<FpVec> cur;
    bool first = true;
    int bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1u)) continue;
      ++bits;
      cur = first ? red[i] : fp_intersection(cur, red[i], p);
      first = false;
    }
    const long long pts = static_cast<long long>(ipow(p, static_cast<int>(cur.size())));
    total += (bits % 2 == 1) ? pts : -pts;
  }
  return static_cast<unsigned long long>(total);
}

}  // namespace commvar
