#include "commvar/nilpotents.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace commvar {

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

void validate_partition(const Partition& p, int n) {
  if (p.empty()) throw InvalidArgument("partition is empty");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) throw InvalidArgument("partition has a non-positive part");
    if (i > 0 && p[i] > p[i - 1]) throw InvalidArgument("partition parts must be non-increasing");
  }
  if (std::accumulate(p.begin(), p.end(), 0) != n)
    throw InvalidArgument("partition does not sum to " + std::to_string(n));
}

std::string partition_label(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

int sl_centralizer_dim_formula(const Partition& d) {
  int s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += (2 * static_cast<int>(i) + 1) * d[i];
  return s - 1;
}

bool FactorOrbit::is_zero() const {
  if (factor.type == 'A') return static_cast<int>(partition.size()) == factor.rank + 1;
  return orbit == "0";
}

bool FactorOrbit::is_regular() const {
  if (factor.type == 'A') return partition.size() == 1;
  return orbit == "reg";
}

OrbitList factor_orbits(const SimpleFactor& f) {
  OrbitList list;
  if (f.type == 'A') {
    for (auto& p : partitions(f.rank + 1)) list.orbits.push_back({f, partition_label(p), p});
  } else if (f.type == 'B' && f.rank == 2) {
    for (const char* name : {"0", "min", "subreg", "reg"}) list.orbits.push_back({f, name, {}});
  } else if (f.type == 'G') {
    // the two orbits between zero and the subregular one are not listed
    for (const char* name : {"0", "subreg", "reg"}) list.orbits.push_back({f, name, {}});
    list.complete = false;
  } else {
    throw UnsupportedFactor(f.label());
  }
  return list;
}

namespace {

RootVec node_root(const LieAlgebra& g, const std::vector<std::pair<int, int>>& combo) {
  RootVec v(g.rank(), 0);
  for (auto [node, mult] : combo) v[node] += mult;
  return v;
}

}  // namespace

LieElement embed_orbit(const LieAlgebra& g, const FactorOrbit& o) {
  const auto& nodes = o.factor.nodes;
  LieElement x = g.zero();
  if (o.factor.type != 'A' && o.orbit == "0") return x;
  if (o.factor.type == 'A') {
    std::size_t pos = 0;
    for (int part : o.partition) {
      for (int k = 0; k + 1 < part; ++k) x += g.x(node_root(g, {{nodes[pos + k], 1}}));
      pos += part;
    }
    return x;
  }
  if (o.factor.type == 'B' && o.factor.rank == 2) {
    const int lng = nodes[0];
    const int sht = nodes[1];
    if (o.orbit == "min" || o.orbit == "reg") x += g.x(node_root(g, {{lng, 1}}));
    if (o.orbit == "subreg" || o.orbit == "reg") x += g.x(node_root(g, {{sht, 1}}));
    return x;
  }
  if (o.factor.type == 'G') {
    const int sht = nodes[0];
    const int lng = nodes[1];
    if (o.orbit == "subreg") {
      x += g.x(node_root(g, {{lng, 1}}));
      x += g.x(node_root(g, {{sht, 3}, {lng, 1}}));
    } else if (o.orbit == "reg") {
      x += g.x(node_root(g, {{sht, 1}}));
      x += g.x(node_root(g, {{lng, 1}}));
    }
    return x;
  }
  throw UnsupportedFactor(o.factor.label());
}

namespace {

SimpleFactor whole_factor(const LieAlgebra& g) {
  std::vector<int> all(g.rank());
  std::iota(all.begin(), all.end(), 0);
  auto f = g.roots().classify(all);
  if (f.size() != 1) throw InvalidArgument("algebra is not simple");
  return f[0];
}

NilpotentRep make_rep(const LieAlgebra& g, const std::vector<FactorOrbit>& parts) {
  NilpotentRep rep;
  rep.element = g.zero();
  rep.parts = parts;
  for (const auto& o : parts) {
    rep.element += embed_orbit(g, o);
    rep.label += (rep.label.empty() ? "" : "+") + o.label();
    rep.factor_signature.push_back(o.factor.label());
  }
  if (parts.empty()) rep.label = "0";
  return rep;
}

}  // namespace

NilpotentRep zero_rep(const LieAlgebra& g, const std::vector<SimpleFactor>& factors) {
  std::vector<FactorOrbit> parts;
  for (const auto& f : factors) {
    if (f.type == 'A') {
      const Partition ones(f.rank + 1, 1);
      parts.push_back({f, partition_label(ones), ones});
    } else {
      parts.push_back({f, "0", {}});
    }
  }
  return make_rep(g, parts);
}

NilpotentRep type_a_rep(const LieAlgebra& g, const Partition& d) {
  if (g.roots().type() != 'A') throw InvalidArgument("type_a_rep needs an algebra of type A");
  const int n = g.rank() + 1;
  validate_partition(d, n);
  const SimpleFactor f = whole_factor(g);
  return make_rep(g, {{f, partition_label(d), d}});
}

std::vector<NilpotentRep> b2_reps(const LieAlgebra& g) {
  if (g.roots().label() != "B2") throw InvalidArgument("b2_reps needs an algebra of type B2");
  const SimpleFactor f = whole_factor(g);
  std::vector<NilpotentRep> out;
  for (const auto& o : factor_orbits(f).orbits) out.push_back(make_rep(g, {o}));
  return out;
}

NilpotentRep g2_subregular(const LieAlgebra& g) {
  if (g.roots().label() != "G2") throw InvalidArgument("g2_subregular needs an algebra of type G2");
  return make_rep(g, {{whole_factor(g), "subreg", {}}});
}

std::vector<NilpotentRep> direct_sum_reps(const LieAlgebra& g, const std::vector<SimpleFactor>& factors,
                                          bool* complete) {
  std::vector<OrbitList> lists;
  bool all_complete = true;
  for (const auto& f : factors) {
    lists.push_back(factor_orbits(f));
    all_complete = all_complete && lists.back().complete;
  }
  if (complete != nullptr) *complete = all_complete;
  std::vector<NilpotentRep> out;
  std::vector<FactorOrbit> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == lists.size()) {
      out.push_back(make_rep(g, cur));
      return;
    }
    for (const auto& o : lists[k].orbits) {
      cur.push_back(o);
      rec(k + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<long> lemma_aaa_h(const Partition& d) {
  const int s = static_cast<int>(d.size());
  if (s < 2) throw InvalidArgument("lemma_aaa_h needs at least two Jordan blocks (x is regular otherwise)");
  const int n = std::accumulate(d.begin(), d.end(), 0);
  std::vector<Rational> a(s);
  Rational weighted = 0;
  for (int i = 0; i < s; ++i) {
    a[i] = s + 1 - 2 * (i + 1);
    weighted += d[i] * a[i];
  }
  const Rational shift = -weighted / n;
  for (auto& v : a) v += shift;
  const RatVector prim = primitive(a);
  std::vector<long> out;
  for (const auto& v : prim) out.push_back(v.get_num().get_si());
  return out;
}

LieElement lemma_aaa_element(const LieAlgebra& g, const Partition& d) {
  if (g.roots().type() != 'A') throw InvalidArgument("lemma_aaa_element needs an algebra of type A");
  validate_partition(d, g.rank() + 1);
  const auto a = lemma_aaa_h(d);
  std::vector<long> diag;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (int k = 0; k < d[i]; ++k) diag.push_back(a[i]);
  // diag(t_1..t_n) = sum_k (t_1 + ... + t_k) H_k
  LieElement h = g.zero();
  long partial = 0;
  for (int k = 0; k < g.rank(); ++k) {
    partial += diag[k];
    h.add(g.h_index(k), partial);
  }
  return h;
}

}  // namespace commvar
