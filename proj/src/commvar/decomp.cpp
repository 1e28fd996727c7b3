#include "commvar/decomp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace commvar {

namespace {

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  if (k > n || k <= 0) return out;
  for (;;) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return out;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

LocusOptions preferred_options(const CentralizerAlgebra& a, LocusOptions opts) {
  if (a.x().is_zero() || opts.primes.size() < 3) {
    opts.mode = CountMode::automatic;
    return opts;
  }
  const bool reduced = std::all_of(opts.primes.begin(), opts.primes.end(),
                                   [&](unsigned p) { return reduced_feasible(a, p); });
  opts.mode = reduced ? CountMode::reduced : CountMode::automatic;
  return opts;
}

std::string subset_label(const std::vector<int>& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i] + 1;
  os << '}';
  return os.str();
}

}  // namespace

LeviData levi_data(const LieAlgebra& g, const std::vector<int>& subset) {
  const RootSystem& rs = g.roots();
  const int r = g.rank();
  for (int i : subset)
    if (i < 0 || i >= r) throw InvalidArgument("subset index out of range");
  if (std::set<int>(subset.begin(), subset.end()).size() != subset.size())
    throw InvalidArgument("subset has repeated indices");

  LeviData out;
  out.subset = subset;
  std::sort(out.subset.begin(), out.subset.end());
  out.subsystem = rs.subsystem(out.subset);

  std::vector<RatVector> t;
  if (out.subset.empty()) {
    for (int j = 0; j < r; ++j) t.push_back(g.h_simple(j).dense());
  } else {
    RatMatrix f(out.subset.size(), r);
    for (std::size_t row = 0; row < out.subset.size(); ++row)
      for (int j = 0; j < r; ++j) f(row, j) = rs.cartan_matrix()[j][out.subset[row]];
    for (const auto& k : kernel_basis(f)) {
      RatVector v(g.dim());
      for (int j = 0; j < r; ++j) v[j] = k[j];
      t.push_back(std::move(v));
    }
  }
  out.t_I = Subspace(&g, t);

  std::vector<RatVector> s;
  for (int root : out.subsystem.roots) s.push_back(g.basis(g.x_index(root)).dense());
  for (int i : out.subset) s.push_back(g.h_simple(i).dense());
  out.s_I = Subspace(&g, s);
  out.g_I = sum(out.t_I, out.s_I);
  out.direct = out.t_I.dim() + out.s_I.dim() == out.g_I.dim() &&
               out.g_I.dim() == r + static_cast<int>(out.subsystem.roots.size());
  return out;
}

FactorCodim FactorCodimCache::get(const FactorOrbit& orbit) {
  std::lock_guard<std::mutex> lock(mu_);
  const std::string key = orbit.label();
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  const std::string alg_key = orbit.factor.label();
  auto& alg = algebras_[alg_key];
  if (!alg) alg = std::make_shared<LieAlgebra>(orbit.factor.type, orbit.factor.rank, build_);
  std::vector<int> all(alg->rank());
  for (int i = 0; i < alg->rank(); ++i) all[i] = i;
  FactorOrbit local{alg->roots().classify(all).at(0), orbit.orbit, orbit.partition};

  const LieElement x = embed_orbit(*alg, local);
  CentralizerAlgebra a(Subspace::whole(*alg), alg->rank(), x);
  FactorCodim fc;
  fc.key = key;
  fc.dim_ax = a.dim();
  fc.irregular = a.dim() > alg->rank();
  if (fc.irregular) {
    fc.estimate = irregular_locus_dim(a, preferred_options(a, opts_));
    switch (fc.estimate.status) {
      case EstimateStatus::determined: fc.codim = a.dim() - fc.estimate.dim; break;
      case EstimateStatus::upper_bound:
        fc.codim = a.dim() - fc.estimate.dim;
        fc.exact = false;
        break;
      case EstimateStatus::empty:
        throw std::logic_error("irregular element " + key + " with empty irregular set");
      case EstimateStatus::inconclusive:
        throw UndeterminedResult("dimension of I(a_x) for " + key + " is inconclusive: " + fc.estimate.notes);
    }
  }
  cache_.emplace(key, fc);
  return fc;
}

DecompClassDescriptor class_descriptor(const LieAlgebra& g, const LeviData& levi, const NilpotentRep& rep,
                                       FactorCodimCache& cache) {
  DecompClassDescriptor d;
  d.subset = levi.subset;
  d.signature = factor_signature(levi.subsystem.factors);
  d.rep = rep;
  d.dim_tI = levi.t_I.dim();
  d.dim_sIx = centralizer(levi.s_I, rep.element).dim();
  d.dim_class = g.dim() - d.dim_sIx;
  const int n = static_cast<int>(levi.subset.size());
  d.irregular = d.dim_sIx > n;

  int sum = 0;
  for (const auto& part : rep.parts) {
    d.factors.push_back(cache.get(part));
    sum += d.factors.back().dim_ax;
  }
  if (!rep.parts.empty() && sum != d.dim_sIx)
    throw std::logic_error("factor centralizers do not add up for " + rep.label);
  if (!d.irregular) return d;

  // I(a + b) = I(a) x b + a x I(b): the codimension is the minimum over factors.
  std::optional<int> exact, bound;
  for (const auto& f : d.factors) {
    if (!f.irregular) continue;
    auto& slot = f.exact ? exact : bound;
    slot = slot ? std::min(*slot, f.codim) : f.codim;
  }
  if (!exact && !bound) throw std::logic_error("irregular class without an irregular factor: " + rep.label);
  if (exact && (!bound || *exact <= *bound)) {
    d.c_value = n + *exact;
  } else {
    d.c_value = n + *bound;
    d.c_exact = false;
  }
  return d;
}

std::optional<int> c_value(const LieAlgebra& g, const std::vector<int>& subset, const NilpotentRep& rep,
                           FactorCodimCache& cache) {
  return class_descriptor(g, levi_data(g, subset), rep, cache).c_value;
}

IrrCodimResult commvar_irr_codim(const LieAlgebra& g, FactorCodimCache& cache) {
  IrrCodimResult res;
  const int r = g.rank();
  bool incomplete = false;
  std::string incomplete_factor;

  auto examine = [&](int k) -> bool {
    std::set<std::string> seen;
    for (const auto& subset : combinations(r, k)) {
      const LeviData levi = levi_data(g, subset);
      if (!levi.direct) throw std::logic_error("g(I) is not t(I) + s(I) for " + subset_label(subset));
      const std::string sig = factor_signature(levi.subsystem.factors);
      if (!seen.insert(sig).second) continue;
      bool complete = true;
      const auto reps = direct_sum_reps(g, levi.subsystem.factors, &complete);
      if (!complete) {
        incomplete = true;
        incomplete_factor = sig;
      }
      for (const auto& rep : reps) {
        res.ledger.push_back(class_descriptor(g, levi, rep, cache));
        const auto& d = res.ledger.back();
        if (d.c_value && d.c_exact && *d.c_value == 2) {
          res.codim = 2;
          res.reason = "c = 2 at I = " + subset_label(subset) + ", x = " + rep.label;
          return true;
        }
      }
    }
    return false;
  };

  auto finish = [&](int cutoff) {
    std::optional<int> best;
    for (const auto& d : res.ledger)
      if (d.c_value && d.c_exact) best = best ? std::min(*best, *d.c_value) : *d.c_value;
    if (!best) throw UndeterminedResult("no class with an exact value of c");
    for (const auto& d : res.ledger) {
      if (d.c_value && *d.c_value < 2) throw std::logic_error("c < 2 contradicts codim >= 2");
      if (d.c_value && !d.c_exact && *d.c_value < *best)
        throw UndeterminedResult("only the bound c >= " + std::to_string(*d.c_value) + " is known for " +
                                 d.rep.label + " at I = " + subset_label(d.subset));
    }
    if (*best > cutoff) best = cutoff;
    res.codim = *best;
    return *best;
  };

  for (int k = 1; k <= std::min(2, r); ++k)
    if (examine(k)) return res;
  if (incomplete)
    throw UndeterminedResult("orbit list of " + incomplete_factor + " is incomplete and c = 2 was not found");

  bool low = false;
  for (const auto& d : res.ledger)
    if (d.c_value && d.c_exact && *d.c_value <= 3) low = true;
  if (!low && r >= 3) {
    examine(3);
    if (incomplete)
      throw UndeterminedResult("orbit list of " + incomplete_factor + " is incomplete");
  }
  // Every class with |I| >= 4 has c >= 4, and c(alpha, 0) = 4.
  finish(4);
  std::ostringstream os;
  os << "minimum of c over " << res.ledger.size() << " classes";
  res.reason = os.str();
  return res;
}

IrrCodimResult commvar_irr_codim(const LieAlgebra& g) {
  FactorCodimCache cache;
  return commvar_irr_codim(g, cache);
}

LeviLocusCheck levi_locus_check(const LieAlgebra& g, const std::vector<int>& subset, const LieElement& x,
                                const LocusOptions& opts) {
  const LeviData levi = levi_data(g, subset);
  if (!levi.s_I.contains(x.dense())) throw InvalidArgument("x does not lie in s(I)");
  LeviLocusCheck out;
  CentralizerAlgebra left(levi.g_I, g.rank(), x);
  CentralizerAlgebra right(levi.s_I, static_cast<int>(levi.subset.size()), x);
  out.g_I = irregular_locus_dim(left, preferred_options(left, opts));
  out.s_I = irregular_locus_dim(right, preferred_options(right, opts));
  out.lhs = out.g_I.dim;
  out.rhs = g.rank() - static_cast<int>(levi.subset.size()) + out.s_I.dim;
  out.holds = out.g_I.status == EstimateStatus::determined && out.s_I.status == EstimateStatus::determined &&
              out.lhs == out.rhs;
  return out;
}

int reductive_min(const std::vector<SimpleIdeal>& ideals, int center_dim, FactorCodimCache& cache) {
  if (center_dim < 0) throw InvalidArgument("center dimension must be non-negative");
  if (ideals.empty()) throw InvalidArgument("a reductive algebra needs at least one simple ideal");
  int best = 4;
  for (const auto& s : ideals) {
    LieAlgebra g(s.type, s.rank);
    best = std::min(best, commvar_irr_codim(g, cache).codim);
  }
  return best;
}

int weyl_orbit_count(const RootSystem& rs) {
  std::vector<int> orbit(rs.num_roots(), -1);
  int count = 0;
  for (int start = 0; start < rs.num_roots(); ++start) {
    if (orbit[start] >= 0) continue;
    std::vector<int> stack{start};
    orbit[start] = count;
    while (!stack.empty()) {
      const RootVec beta = rs.roots()[stack.back()];
      stack.pop_back();
      for (int i = 0; i < rs.rank(); ++i) {
        RootVec img = beta;
        img[i] -= rs.pairing(beta, i);
        const int idx = rs.index_of(img);
        if (idx < 0) throw std::logic_error("reflection left the root system");
        if (orbit[idx] < 0) {
          orbit[idx] = count;
          stack.push_back(idx);
        }
      }
    }
    ++count;
  }
  return count;
}

}  // namespace commvar
