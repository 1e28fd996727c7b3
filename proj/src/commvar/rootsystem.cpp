#include "commvar/rootsystem.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "commvar/exact.hpp"

namespace commvar {

std::string validate_type(char type, int rank) {
  switch (type) {
    case 'A': return rank >= 1 ? "" : "type A needs rank >= 1";
    case 'B': return rank >= 2 ? "" : "type B needs rank >= 2";
    case 'C': return rank >= 2 ? "" : "type C needs rank >= 2";
    case 'D': return rank >= 3 ? "" : "type D needs rank >= 3";
    case 'E': return (rank >= 6 && rank <= 8) ? "" : "type E needs rank 6, 7 or 8";
    case 'F': return rank == 4 ? "" : "type F needs rank 4";
    case 'G': return rank == 2 ? "" : "type G needs rank 2";
    default: return std::string("unknown type label '") + type + "' (expected one of A-G)";
  }
}

std::string factor_signature(const std::vector<SimpleFactor>& factors) {
  std::vector<std::string> labels;
  for (const auto& f : factors) labels.push_back(f.label());
  std::sort(labels.begin(), labels.end());
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : "+") + l;
  return out.empty() ? "0" : out;
}

RootSystem::RootSystem(char type, int rank) : type_(type), rank_(rank) {
  if (auto why = validate_type(type, rank); !why.empty()) throw InvalidArgument(why);
  requested_ = std::string(1, type) + std::to_string(rank);
  if (type_ == 'C' && rank_ == 2) type_ = 'B';

  const int r = rank_;
  std::vector<std::pair<int, int>> edges;
  sqlen_.assign(r, 2);
  for (int i = 0; i + 1 < r; ++i) edges.emplace_back(i, i + 1);
  switch (type_) {
    case 'B':
      std::fill(sqlen_.begin(), sqlen_.end() - 1, 4);
      lacety_ = 2;
      break;
    case 'C':
      sqlen_[r - 1] = 4;
      lacety_ = 2;
      break;
    case 'D':
      edges.back() = {r - 3, r - 1};
      break;
    case 'E':
      // 1-3-4-5-..., with 2 attached to 4
      edges.clear();
      edges.emplace_back(0, 2);
      edges.emplace_back(1, 3);
      for (int i = 2; i + 1 < r; ++i) edges.emplace_back(i, i + 1);
      break;
    case 'F':
      sqlen_ = {4, 4, 2, 2};
      lacety_ = 2;
      break;
    case 'G':
      sqlen_ = {2, 6};
      lacety_ = 3;
      break;
    default: break;
  }

  form_.assign(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) form_[i][i] = sqlen_[i];
  for (auto [i, j] : edges) form_[i][j] = form_[j][i] = -std::max(sqlen_[i], sqlen_[j]) / 2;
  cartan_.assign(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) cartan_[i][j] = 2 * form_[i][j] / sqlen_[i];

  // closure of the simple roots under simple reflections
  std::set<RootVec> seen;
  std::deque<RootVec> queue;
  for (int i = 0; i < r; ++i) {
    RootVec v(r, 0);
    v[i] = 1;
    seen.insert(v);
    queue.push_back(v);
  }
  while (!queue.empty()) {
    RootVec b = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      RootVec s = b;
      s[i] -= pairing(b, i);
      if (seen.insert(s).second) queue.push_back(s);
    }
  }

  std::vector<RootVec> pos;
  for (const auto& v : seen)
    if (std::all_of(v.begin(), v.end(), [](int c) { return c >= 0; })) pos.push_back(v);
  std::sort(pos.begin(), pos.end(), [](const RootVec& a, const RootVec& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    return ha != hb ? ha < hb : a < b;
  });
  roots_ = pos;
  for (const auto& v : pos) {
    RootVec n = v;
    for (auto& c : n) c = -c;
    roots_.push_back(n);
  }
  for (int k = 0; k < static_cast<int>(roots_.size()); ++k) index_[roots_[k]] = k;
}

int RootSystem::index_of(const RootVec& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::negative_of(int idx) const {
  const int n = num_positive();
  return idx < n ? idx + n : idx - n;
}

int RootSystem::simple_index(int i) const {
  RootVec v(rank_, 0);
  v[i] = 1;
  return index_of(v);
}

int RootSystem::inner(const RootVec& a, const RootVec& b) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += a[i] * form_[i][j] * b[j];
  return s;
}

int RootSystem::pairing(const RootVec& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += beta[j] * cartan_[i][j];
  return s;
}

int RootSystem::height(int idx) const {
  const auto& v = roots_[idx];
  return std::accumulate(v.begin(), v.end(), 0);
}

std::vector<int> RootSystem::coroot(int idx) const {
  const auto& v = roots_[idx];
  const int len = inner(v, v);
  std::vector<int> c(rank_);
  for (int i = 0; i < rank_; ++i) c[i] = v[i] * sqlen_[i] / len;
  return c;
}

int RootSystem::root_length_classes() const {
  std::set<int> lens;
  for (const auto& v : roots_) lens.insert(inner(v, v));
  return static_cast<int>(lens.size());
}

Subsystem RootSystem::subsystem(const std::vector<int>& subset) const {
  Subsystem s;
  s.subset = subset;
  std::sort(s.subset.begin(), s.subset.end());
  std::vector<bool> in(rank_, false);
  for (int i : s.subset) {
    if (i < 0 || i >= rank_) throw InvalidArgument("subsystem: simple root index out of range");
    in[i] = true;
  }
  for (int k = 0; k < num_roots(); ++k) {
    bool ok = true;
    for (int i = 0; i < rank_; ++i)
      if (roots_[k][i] != 0 && !in[i]) ok = false;
    if (!ok) continue;
    s.roots.push_back(k);
    if (is_positive(k)) s.positive.push_back(k);
  }
  s.factors = classify(s.subset);
  return s;
}

std::vector<SimpleFactor> RootSystem::classify(const std::vector<int>& subset_in) const {
  std::vector<int> subset = subset_in;
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  std::vector<bool> in(rank_, false);
  for (int i : subset) in[i] = true;
  auto adj = [&](int i) {
    std::vector<int> out;
    for (int j = 0; j < rank_; ++j)
      if (j != i && in[j] && form_[i][j] != 0) out.push_back(j);
    return out;
  };

  std::vector<SimpleFactor> factors;
  std::vector<bool> done(rank_, false);
  for (int start : subset) {
    if (done[start]) continue;
    std::vector<int> comp;
    std::deque<int> q{start};
    done[start] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      comp.push_back(v);
      for (int w : adj(v))
        if (!done[w]) {
          done[w] = true;
          q.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    const int n = static_cast<int>(comp.size());

    // path walk from a given end
    auto walk = [&](int from) {
      std::vector<int> order{from};
      int prev = -1;
      int cur = from;
      for (;;) {
        int next = -1;
        for (int w : adj(cur))
          if (w != prev) next = w;
        if (next < 0) break;
        prev = cur;
        cur = next;
        order.push_back(cur);
      }
      return order;
    };

    SimpleFactor f;
    f.rank = n;
    int branch = -1;
    std::vector<int> ends;
    for (int v : comp) {
      const auto a = adj(v);
      if (a.size() >= 3) branch = v;
      if (a.size() <= 1) ends.push_back(v);
    }
    bool multi = false;
    int max_len = 0;
    int min_len = 1000;
    for (int v : comp) {
      max_len = std::max(max_len, sqlen_[v]);
      min_len = std::min(min_len, sqlen_[v]);
    }
    multi = max_len != min_len;

    if (n == 1) {
      f.type = 'A';
      f.nodes = comp;
    } else if (multi && max_len == 3 * min_len) {
      f.type = 'G';
      f.nodes = sqlen_[comp[0]] < sqlen_[comp[1]] ? comp : std::vector<int>{comp[1], comp[0]};
    } else if (multi) {
      int nlong = 0;
      for (int v : comp) nlong += sqlen_[v] == max_len;
      const int nshort = n - nlong;
      // start from a long end so that the standard order reads long ... short
      int long_end = sqlen_[ends[0]] == max_len ? ends[0] : ends[1];
      f.nodes = walk(long_end);
      if (n == 2) {
        f.type = 'B';
      } else if (nlong == 2 && nshort == 2 && n == 4) {
        f.type = 'F';
      } else if (nshort == 1) {
        f.type = 'B';
      } else {
        // one long node at the end: type C, read short ... long
        f.type = 'C';
        f.nodes = walk(sqlen_[ends[0]] == min_len ? ends[0] : ends[1]);
      }
    } else if (branch >= 0) {
      std::vector<std::vector<int>> arms;
      for (int w : adj(branch)) {
        std::vector<int> arm{w};
        int prev = branch;
        int cur = w;
        for (;;) {
          int next = -1;
          for (int u : adj(cur))
            if (u != prev) next = u;
          if (next < 0) break;
          prev = cur;
          cur = next;
          arm.push_back(cur);
        }
        arms.push_back(arm);
      }
      std::sort(arms.begin(), arms.end(),
                [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
      if (arms[0].size() == 1 && arms[1].size() == 1) {
        f.type = 'D';
        // long arm from its end, then the branch, then the two short arms
        std::vector<int> order(arms[2].rbegin(), arms[2].rend());
        order.push_back(branch);
        order.push_back(arms[0][0]);
        order.push_back(arms[1][0]);
        f.nodes = order;
      } else {
        f.type = 'E';
        std::vector<int> order{arms[1][1], arms[0][0], arms[1][0], branch};
        for (int v : arms[2]) order.push_back(v);
        f.nodes = order;
      }
    } else {
      f.type = 'A';
      f.nodes = walk(std::min(ends[0], ends[1]));
    }
    factors.push_back(f);
  }
  return factors;
}

}  // namespace commvar
