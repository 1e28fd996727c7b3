#include "commvar/verify.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <set>

#include "commvar/decomp.hpp"
#include "commvar/parallel.hpp"
#include "commvar/sl2toric.hpp"

namespace commvar {

using nlohmann::json;

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "fail";
}

std::vector<std::pair<char, int>> table_types(int max_rank) {
  std::vector<std::pair<char, int>> out;
  for (int r = 1; r <= max_rank; ++r) out.emplace_back('A', r);
  for (int r = 2; r <= max_rank; ++r) out.emplace_back('B', r);
  for (int r = 3; r <= max_rank; ++r) out.emplace_back('C', r);
  for (int r = 4; r <= max_rank; ++r) out.emplace_back('D', r);
  for (auto t : {std::pair<char, int>{'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}}) out.push_back(t);
  return out;
}

namespace {

struct Context {
  VerifyOptions opts;
  std::vector<unsigned> primes;
  BuildOptions build;
  unsigned inner_workers = 1;
  std::shared_ptr<FactorCodimCache> cache;

  [[nodiscard]] LocusOptions locus(CountMode mode, const std::string& id) const {
    LocusOptions lo;
    lo.mode = mode;
    lo.primes = primes;
    lo.workers = inner_workers;
    lo.seed = seed_for(id);
    return lo;
  }

  [[nodiscard]] std::uint64_t seed_for(const std::string& id) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : id) h = (h ^ c) * 1099511628211ULL;
    return h ^ opts.seed;
  }
};

struct Task {
  std::string id;   // used when the whole task throws
  std::string ref;
  std::function<std::vector<CheckResult>()> run;
};

CheckResult compare(std::string id, std::string ref, json expected, json computed) {
  CheckResult c{std::move(id), std::move(ref), std::move(expected), std::move(computed), CheckStatus::fail};
  c.status = c.expected == c.computed ? CheckStatus::pass : CheckStatus::fail;
  return c;
}

CheckResult undecided(std::string id, std::string ref, json expected, const std::string& why) {
  return {std::move(id), std::move(ref), std::move(expected), json("inconclusive: " + why), CheckStatus::inconclusive};
}

std::string type_label(char t, int r) { return std::string(1, t) + std::to_string(r); }

// Codimension of I(a_x) as a check: determined estimates are compared,
// anything else is inconclusive.
CheckResult codim_check(const std::string& id, const std::string& ref, int expected, const CentralizerAlgebra& a,
                        const DimensionEstimate& est) {
  if (est.status != EstimateStatus::determined) {
    json counts = json::array();
    for (const auto& pc : est.per_prime_counts) counts.push_back({pc.prime, pc.count});
    return undecided(id, ref, expected, to_string(est.status) + " " + est.notes + " counts " + counts.dump());
  }
  return compare(id, ref, expected, a.dim() - est.dim);
}

// ---------------------------------------------------------------------------
// Structure constants

void structure_tasks(const Context& ctx, std::vector<Task>& tasks) {
  for (auto [t, r] : table_types(ctx.opts.max_rank)) {
    const std::string id = "structure.jacobi." + type_label(t, r);
    tasks.push_back({id, "Chevalley basis satisfies the Jacobi identity", [=, &ctx] {
      LieAlgebra g(t, r, ctx.build);
      const int m = g.dim();
      long defects = 0;
      if (m <= 14) {
        for (int i = 0; i < m; ++i)
          for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k)
              if (!jacobi_defect(g, i, j, k).is_zero()) ++defects;
      } else {
        std::mt19937_64 rng(ctx.seed_for(id));
        std::uniform_int_distribution<int> pick(0, m - 1);
        const int samples = ctx.opts.fast ? 2000 : 10000;
        for (int s = 0; s < samples; ++s)
          if (!jacobi_defect(g, pick(rng), pick(rng), pick(rng)).is_zero()) ++defects;
      }
      return std::vector<CheckResult>{
          compare(id, "Chevalley basis satisfies the Jacobi identity", 0, json(defects)),
          compare("structure.cyclic." + type_label(t, r), "N_ab, N_bc, N_ca agree up to root lengths when a+b+c = 0",
                  0, json(cyclic_relation_violations(g)))};
    }});
  }

  tasks.push_back({"structure.constants", "structure constants used in the rank two cases", [&ctx] {
    std::vector<CheckResult> out;
    LieAlgebra a2('A', 2, ctx.build);
    const auto& r2 = a2.roots();
    out.push_back(compare("structure.constants.sl3_abs_N", "|N| = 1 for [X_{a1+a2}, X_{-a2}] in sl3", 1,
                          std::abs(a2.structure_constant(r2.index_of({1, 1}), r2.index_of({0, -1})))));
    LieAlgebra b2('B', 2, ctx.build);
    const auto& rb = b2.roots();
    out.push_back(compare("structure.constants.so5_abs_N", "|N| = 2 for [X_{a1+a2}, X_{-a2}] in so5", 2,
                          std::abs(b2.structure_constant(rb.index_of({1, 1}), rb.index_of({0, -1})))));
    LieAlgebra g2('G', 2, ctx.build);
    const LieElement e = g2.x({0, 1}) + g2.x({3, 1});
    const LieElement f = Rational(-2) * (g2.x({0, -1}) + g2.x({-3, -1}));
    const LieElement h = Rational(2) * (g2.h_root({0, 1}) + g2.h_root({3, 1}));
    out.push_back(compare("structure.g2_triple", "e, f, h is an sl2-triple in G2 with a1(h) = 0, a2(h) = 2",
                          json::array({true, "0", "2"}),
                          json::array({sl2_triple_check(e, f, h),
                                       to_string(g2.root_value(g2.roots().simple_index(0), h)),
                                       to_string(g2.root_value(g2.roots().simple_index(1), h))})));
    return out;
  }});
}

// ---------------------------------------------------------------------------
// The rank two case analyses

struct LocalCase {
  std::string name;
  std::string ref;
  char type;
  int rank;
  std::vector<int> levi;  // empty: the whole algebra
  std::function<LieElement(const LieAlgebra&)> x;
  int dim_ax;
  int codim;
};

std::vector<LocalCase> local_cases() {
  return {
      {"sl2xsl2_e0", "sl2 + sl2 at (e, 0): I(a_x) = <e> + 0", 'A', 3, {0, 2},
       [](const LieAlgebra& g) { return g.x({1, 0, 0}); }, 4, 3},
      {"sl3_Xa1", "sl3 at X_a1: I(a_x) = <X_a1>", 'A', 2, {},
       [](const LieAlgebra& g) { return g.x({1, 0}); }, 4, 3},
      {"so5_Xa2", "so5 at the subregular X_a2: I(a_x) is a 3-dimensional span", 'B', 2, {},
       [](const LieAlgebra& g) { return g.x({0, 1}); }, 4, 1},
      {"so5_Xa1", "so5 at the minimal X_a1: I(a_x) is a union of six 3-dimensional spans", 'B', 2, {},
       [](const LieAlgebra& g) { return g.x({1, 0}); }, 6, 3},
      {"g2_subregular", "G2 at the subregular e: I(a_x) = a_x", 'G', 2, {},
       [](const LieAlgebra& g) { return g2_subregular(g).element; }, 4, 0},
  };
}

using Combination = std::vector<std::pair<RootVec, GaussRational>>;

std::vector<GaussVector> so5_span(const LieAlgebra& g, const std::vector<Combination>& vecs) {
  std::vector<GaussVector> out;
  for (const auto& combo : vecs) {
    GaussVector v(g.dim(), GaussRational(0));
    for (const auto& [root, c] : combo) v[g.x_index(g.roots().index_of(root))] += c;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<std::vector<GaussVector>> so5_listed_spans(const LieAlgebra& g) {
  const GaussRational one(1);
  const GaussRational i(0, 1);
  const GaussRational mi(0, -1);
  const RootVec a1{1, 0}, a12{1, 1}, a122{1, 2}, ma2{0, -1}, ma122{-1, -2};
  return {
      so5_span(g, {{{a1, one}}, {{a122, one}}, {{ma2, one}}}),
      so5_span(g, {{{a1, one}}, {{a12, one}}, {{a122, one}}}),
      so5_span(g, {{{a1, one}}, {{a12, one}}, {{ma2, one}}}),
      so5_span(g, {{{a1, one}}, {{ma2, one}}, {{ma122, one}}}),
      so5_span(g, {{{a1, one}}, {{ma2, one}, {a12, i}}, {{a122, one}}}),
      so5_span(g, {{{a1, one}}, {{ma2, one}, {a12, mi}}, {{a122, one}}}),
  };
}

namespace {

void local_tasks(const Context& ctx, std::vector<Task>& tasks) {
  for (const auto& lc : local_cases()) {
    const std::string base = lc.name;
    tasks.push_back({"locus.codim." + base, lc.ref, [lc, &ctx] {
      std::vector<CheckResult> out;
      LieAlgebra g(lc.type, lc.rank, ctx.build);
      const LieElement x = lc.x(g);
      Subspace ambient = Subspace::whole(g);
      int rk = g.rank();
      if (!lc.levi.empty()) {
        ambient = levi_data(g, lc.levi).s_I;
        rk = static_cast<int>(lc.levi.size());
      }
      CentralizerAlgebra a(ambient, rk, x);
      out.push_back(compare("centralizer.dim." + lc.name, lc.ref, lc.dim_ax, a.dim()));

      const std::string id = "locus.codim." + lc.name;
      const auto est = irregular_locus_dim(a, ctx.locus(CountMode::exhaustive, id));
      out.push_back(codim_check(id, lc.ref, lc.codim, a, est));

      if (lc.name == "sl3_Xa1" || lc.name == "g2_subregular") {
        const unsigned long long expect = lc.name == "sl3_Xa1" ? 5ULL : 625ULL;
        const auto it = std::find_if(est.per_prime_counts.begin(), est.per_prime_counts.end(),
                                     [](const PrimeCount& pc) { return pc.prime == 5; });
        const json got = it == est.per_prime_counts.end() ? json(nullptr) : json(it->count);
        out.push_back(compare("locus.count_p5." + lc.name, "number of irregular points over F_5", expect, got));
      }
      if (lc.name == "sl2xsl2_e0") {
        GaussVector e(g.dim(), GaussRational(0));
        e[x.coeffs().begin()->first] = GaussRational(1);
        const bool contained = verify_linear_component(a, {e}, 50, ctx.seed_for("sl2xsl2"));
        out.push_back(compare("locus.irregular_set." + lc.name, "I(a_x) is the line <e> + 0", json::array({true, 1}),
                              json::array({contained, est.status == EstimateStatus::determined ? est.dim : -1})));
      }
      if (lc.name == "so5_Xa1") {
        const auto spans = so5_listed_spans(g);
        const unsigned long long frozen[2] = {kSo5SpanUnion5, kSo5SpanUnion13};
        const unsigned ps[2] = {5, 13};
        for (int k = 0; k < 2; ++k) {
          const std::string pk = "p" + std::to_string(ps[k]);
          const auto it = std::find_if(est.per_prime_counts.begin(), est.per_prime_counts.end(),
                                       [&](const PrimeCount& pc) { return pc.prime == ps[k]; });
          const unsigned long long n =
              it != est.per_prime_counts.end() ? it->count : exact_point_count(a, ps[k], ctx.inner_workers);
          out.push_back(compare("so5_union.locus_count." + pk,
                                "I(a_x) over F_p equals the union of the six listed spans", frozen[k], n));
          out.push_back(compare("so5_union.span_union_count." + pk,
                                "inclusion-exclusion count of the six listed spans", frozen[k],
                                union_count_mod_p(spans, ps[k])));
        }
        for (std::size_t s = 0; s < spans.size(); ++s)
          out.push_back(compare("so5_union.span_contained." + std::to_string(s + 1),
                                "listed span lies in I(a_x)", true,
                                verify_linear_component(a, spans[s], 50, ctx.seed_for("span" + std::to_string(s)))));
      }
      return out;
    }});
  }

  tasks.push_back({"locus.generic_dim", "generic centralizer dimension in a_x", [&ctx] {
    std::vector<CheckResult> out;
    LieAlgebra a1('A', 1, ctx.build);
    out.push_back(compare("locus.generic_dim.sl2_zero", "generic element of sl2 is regular", 1,
                          generic_centralizer_dim(CentralizerAlgebra(Subspace::whole(a1), 1, a1.zero()), 20,
                                                  ctx.seed_for("gsl2"))));
    LieAlgebra b2('B', 2, ctx.build);
    out.push_back(compare("locus.generic_dim.so5_Xa2", "rk A = 2 for d != 0", 2,
                          generic_centralizer_dim(CentralizerAlgebra(Subspace::whole(b2), 2, b2.x({0, 1})), 20,
                                                  ctx.seed_for("gso5"))));
    LieAlgebra g2('G', 2, ctx.build);
    out.push_back(compare("locus.generic_dim.g2_subregular", "every element of a_x is irregular", 3,
                          generic_centralizer_dim(CentralizerAlgebra(Subspace::whole(g2), 2, g2_subregular(g2).element),
                                                  20, ctx.seed_for("gg2"))));
    return out;
  }});
}

// ---------------------------------------------------------------------------
// The classification table and formulas

void theorem_tasks(const Context& ctx, std::vector<Task>& tasks) {
  for (auto [t, r] : table_types(ctx.opts.max_rank)) {
    const std::string label = type_label(t, r);
    tasks.push_back({"theorem.codim." + label, "codim of the irregular part equals 5 - lacety", [=, &ctx] {
      std::vector<CheckResult> out;
      LieAlgebra g(t, r, ctx.build);
      const int expected = 5 - g.roots().lacety();
      try {
        out.push_back(compare("theorem.codim." + label, "codim of the irregular part equals 5 - lacety", expected,
                              commvar_irr_codim(g, *ctx.cache).codim));
      } catch (const UndeterminedResult& e) {
        out.push_back(undecided("theorem.codim." + label, "codim of the irregular part equals 5 - lacety", expected,
                                e.what()));
      }
      out.push_back(compare("theorem.components." + label,
                            "irreducible components of the irregular part, one per root length",
                            g.roots().root_length_classes(), weyl_orbit_count(g.roots())));
      return out;
    }});

    tasks.push_back({"formula.sheet_dim." + label, "dim D(a, 0) = m - 3", [=, &ctx] {
      std::vector<CheckResult> out;
      LieAlgebra g(t, r, ctx.build);
      const auto& rs = g.roots();
      std::set<int> lengths;
      for (int i = 0; i < r; ++i) {
        const int root = rs.simple_index(i);
        const int len = rs.inner(rs.roots()[root], rs.roots()[root]);
        if (!lengths.insert(len).second) continue;
        const std::string id = "formula.sheet_dim." + label + ".a" + std::to_string(i + 1);
        out.push_back(compare(id, "dim D(a, 0) = m - 3", g.dim() - 3, sheet_dim_generic(g, root, 2, ctx.seed_for(id))));
      }
      return out;
    }});

    tasks.push_back({"formula.c_zero." + label, "c(I, 0) = 3 + |I|", [=, &ctx] {
      std::vector<CheckResult> out;
      LieAlgebra g(t, r, ctx.build);
      const int top = std::min(3, r);
      for (int k = 1; k <= top; ++k) {
        std::set<std::string> seen;
        std::vector<int> c(k);
        std::iota(c.begin(), c.end(), 0);
        for (;;) {
          const LeviData levi = levi_data(g, c);
          const std::string sig = factor_signature(levi.subsystem.factors);
          if (seen.insert(sig).second) {
            const std::string id = "formula.c_zero." + label + "." + sig;
            const auto d = class_descriptor(g, levi, zero_rep(g, levi.subsystem.factors), *ctx.cache);
            const json got = d.c_value && d.c_exact ? json(*d.c_value) : json("not determined");
            out.push_back(compare(id, "c(I, 0) = 3 + |I|", 3 + k, got));
          }
          int i = k - 1;
          while (i >= 0 && c[i] == r - k + i) --i;
          if (i < 0) break;
          ++c[i];
          for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        }
      }
      return out;
    }});

    if (r <= 3) {
      tasks.push_back({"formula.mu_rank." + label, "rk d mu = dim([g, a] + [g, b]) = m - dim(g_a cap g_b)", [=, &ctx] {
        LieAlgebra g(t, r, ctx.build);
        std::mt19937_64 rng(ctx.seed_for("mu" + label));
        int good = 0;
        for (int s = 0; s < 100; ++s) {
          LieElement a = random_element(g, rng, 3);
          LieElement b = s % 2 == 0 ? random_element(g, rng, 3) : Rational(static_cast<long>(rng() % 5) - 2) * a;
          if (s % 4 == 3) b = random_positive_nilpotent(g, rng);
          if (mu_rank_identity(a, b).identities_hold) ++good;
        }
        return std::vector<CheckResult>{compare("formula.mu_rank." + label,
                                                "rk d mu = dim([g, a] + [g, b]) = m - dim(g_a cap g_b)", 100, good)};
      }});
    }
  }

  struct LeviCase {
    std::string name;
    char type;
    int rank;
    std::vector<int> subset;
    std::string orbit;
  };
  const std::vector<LeviCase> levi_cases = {
      {"A2.[2,1]", 'A', 2, {0, 1}, "[2,1]"},   {"A3.A2.[2,1]", 'A', 3, {0, 1}, "[2,1]"},
      {"B3.A2.[2,1]", 'B', 3, {0, 1}, "[2,1]"}, {"B2.min", 'B', 2, {0, 1}, "min"},
      {"B2.subreg", 'B', 2, {0, 1}, "subreg"},  {"B3.B2.min", 'B', 3, {1, 2}, "min"},
      {"B3.B2.subreg", 'B', 3, {1, 2}, "subreg"}, {"C3.B2.min", 'C', 3, {1, 2}, "min"},
      {"C3.B2.subreg", 'C', 3, {1, 2}, "subreg"}, {"F4.B2.min", 'F', 4, {1, 2}, "min"},
      {"F4.B2.subreg", 'F', 4, {1, 2}, "subreg"},
  };
  for (const auto& lc : levi_cases) {
    const std::string id = "formula.levi_locus." + lc.name;
    const std::string ref = "dim I(g(I)_x) = r - |I| + dim I(s(I)_x)";
    tasks.push_back({id, ref, [=, &ctx] {
      LieAlgebra g(lc.type, lc.rank, ctx.build);
      const LeviData levi = levi_data(g, lc.subset);
      const auto& f = levi.subsystem.factors.at(0);
      FactorOrbit orbit;
      for (const auto& o : factor_orbits(f).orbits)
        if (o.orbit == lc.orbit) orbit = o;
      const LieElement x = embed_orbit(g, orbit);
      const auto res = levi_locus_check(g, lc.subset, x, ctx.locus(CountMode::automatic, id));
      if (res.g_I.status != EstimateStatus::determined || res.s_I.status != EstimateStatus::determined)
        return std::vector<CheckResult>{undecided(id, ref, "lhs = rhs", res.g_I.notes + " / " + res.s_I.notes)};
      return std::vector<CheckResult>{compare(id, ref, res.rhs, res.lhs)};
    }});
  }

  tasks.push_back({"lemma_aaa", "h with a_1 > ... > a_s, sum d_i a_i = 0 and dim (m_h)_x = n - 1", [&ctx] {
    std::vector<CheckResult> out;
    for (int n = 2; n <= 6; ++n) {
      LieAlgebra g('A', n - 1, ctx.build);
      int total = 0, good = 0;
      for (const auto& d : partitions(n)) {
        if (d.size() < 2) continue;
        ++total;
        const auto a = lemma_aaa_h(d);
        bool ok = std::is_sorted(a.begin(), a.end(), std::greater<>()) &&
                  std::adjacent_find(a.begin(), a.end()) == a.end();
        long weighted = 0;
        for (std::size_t i = 0; i < d.size(); ++i) weighted += d[i] * a[i];
        ok = ok && weighted == 0;
        const LieElement h = lemma_aaa_element(g, d);
        const LieElement x = type_a_rep(g, d).element;
        ok = ok && bracket(h, x).is_zero();
        const Subspace mh = centralizer(Subspace::whole(g), h);
        ok = ok && centralizer(mh, x).dim() == n - 1;
        if (ok) ++good;
      }
      out.push_back(compare("lemma_aaa.n" + std::to_string(n),
                            "h with a_1 > ... > a_s, sum d_i a_i = 0 and dim (m_h)_x = n - 1", total, good));
    }
    return out;
  }});
}

// ---------------------------------------------------------------------------
// sl2

void sl2_tasks(const Context& ctx, std::vector<Task>& tasks) {
  tasks.push_back({"sl2", "the commuting variety of sl2", [&ctx] {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(ctx.seed_for("sl2"));
    std::set<int> ranks;
    int vanish = 0, bracket_ok = 0;
    const auto gens = ideal_generators();
    for (int s = 0; s < 100; ++s) {
      const Sl2Point p = random_point_on_c(rng);
      ranks.insert(jacobian_rank(p));
      if (gens[0](p) == 0 && gens[1](p) == 0 && gens[2](p) == 0) ++vanish;
      Sl2Point q;
      for (auto& v : q) v = static_cast<long>(rng() % 7) - 3;
      const auto b = sl2_bracket_coordinates(q);
      if (b[0] == -2 * gens[2](q) && b[1] == 2 * gens[0](q) && b[2] == gens[1](q)) ++bracket_ok;
    }
    out.push_back(compare("sl2.generators_vanish_on_c", "the three quadrics vanish on C", 100, vanish));
    out.push_back(compare("sl2.generators_match_bracket", "the quadrics are the coordinates of [x, y]", 100, bracket_ok));
    out.push_back(compare("sl2.jacobian_rank.nonzero", "C is smooth away from the origin", json::array({2}),
                          json(std::vector<int>(ranks.begin(), ranks.end()))));
    Sl2Point origin;
    for (auto& v : origin) v = 0;
    out.push_back(compare("sl2.jacobian_rank.origin", "the origin is singular", 0, jacobian_rank(origin)));
    const AffineSemigroup s = torus_semigroup();
    out.push_back(compare("sl2.torus.rank", "T is a 4-dimensional subtorus", 4, s.lattice_rank));
    out.push_back(compare("sl2.torus.saturated", "the orbit semigroup is saturated, so C is normal", true,
                          is_saturated(s)));
    return out;
  }});
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  if (opts.max_rank < 1) throw InvalidArgument("max_rank must be at least 1");
  Context ctx;
  ctx.opts = opts;
  ctx.primes = opts.fast ? std::vector<unsigned>{5, 13} : std::vector<unsigned>{5, 13, 17};
  ctx.build.tamper = opts.tamper;
  const unsigned workers = opts.workers == 0 ? default_workers() : opts.workers;
  ctx.inner_workers = workers;
  LocusOptions cache_opts;
  cache_opts.primes = ctx.primes;
  cache_opts.workers = ctx.inner_workers;
  cache_opts.seed = opts.seed;
  ctx.cache = std::make_shared<FactorCodimCache>(cache_opts, ctx.build);

  std::vector<Task> tasks;
  structure_tasks(ctx, tasks);
  local_tasks(ctx, tasks);
  theorem_tasks(ctx, tasks);
  sl2_tasks(ctx, tasks);

  std::vector<std::vector<CheckResult>> results(tasks.size());
  parallel_for(
      tasks.size(),
      [&](std::size_t i) {
        try {
          results[i] = tasks[i].run();
        } catch (const UndeterminedResult& e) {
          results[i] = {undecided(tasks[i].id, tasks[i].ref, nullptr, e.what())};
        } catch (const UnsupportedFactor& e) {
          results[i] = {undecided(tasks[i].id, tasks[i].ref, nullptr, e.what())};
        } catch (const std::exception& e) {
          results[i] = {CheckResult{tasks[i].id, tasks[i].ref, nullptr, json(std::string("error: ") + e.what()),
                                    CheckStatus::fail}};
        }
      },
      workers);

  std::vector<CheckResult> all;
  for (auto& r : results)
    for (auto& c : r) all.push_back(std::move(c));
  std::sort(all.begin(), all.end(), [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
  return all;
}

json report_json(const std::vector<CheckResult>& results) {
  json arr = json::array();
  for (const auto& c : results)
    arr.push_back({{"check_id", c.check_id},
                   {"paper_ref", c.paper_ref},
                   {"expected", c.expected},
                   {"computed", c.computed},
                   {"status", to_string(c.status)}});
  return arr;
}

int report_exit_code(const std::vector<CheckResult>& results) {
  bool inconclusive = false;
  for (const auto& c : results) {
    if (c.status == CheckStatus::fail) return 1;
    if (c.status == CheckStatus::inconclusive) inconclusive = true;
  }
  return inconclusive ? 4 : 0;
}

const CheckResult* first_failure(const std::vector<CheckResult>& results) {
  for (const auto& c : results)
    if (c.status == CheckStatus::fail) return &c;
  return nullptr;
}

}  // namespace commvar
