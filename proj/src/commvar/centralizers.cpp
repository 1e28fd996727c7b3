#include "commvar/centralizers.hpp"

namespace commvar {

Subspace::Subspace(const LieAlgebra* g, const std::vector<RatVector>& spanning) : g_(g) {
  for (const auto& v : spanning) {
    if (g != nullptr && static_cast<int>(v.size()) != g->dim()) throw InvalidArgument("Subspace: vector has wrong length");
    if (!contains(v)) basis_.push_back(v);
  }
}

Subspace::Subspace(const LieAlgebra* g, const std::vector<LieElement>& spanning) : g_(g) {
  for (const auto& e : spanning) {
    if (e.algebra() != nullptr && e.algebra() != g) throw InvalidArgument("Subspace: element from another algebra");
    RatVector v = LieElement(g, e.dense()).dense();
    if (!contains(v)) basis_.push_back(std::move(v));
  }
}

Subspace Subspace::from_independent(const LieAlgebra* g, std::vector<RatVector> basis) {
  Subspace s;
  s.g_ = g;
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::whole(const LieAlgebra& g) {
  std::vector<RatVector> b;
  for (int i = 0; i < g.dim(); ++i) b.push_back(g.basis(i).dense());
  return from_independent(&g, std::move(b));
}

Subspace Subspace::cartan(const LieAlgebra& g) {
  std::vector<RatVector> b;
  for (int i = 0; i < g.rank(); ++i) b.push_back(g.basis(i).dense());
  return from_independent(&g, std::move(b));
}

RatVector Subspace::combine(const RatVector& c) const {
  if (c.size() != basis_.size()) throw InvalidArgument("Subspace::combine: wrong number of coefficients");
  RatVector out(g_->dim());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (c[k] == 0) continue;
    for (std::size_t i = 0; i < out.size(); ++i)
      if (basis_[k][i] != 0) out[i] += c[k] * basis_[k][i];
  }
  return out;
}

RatMatrix Subspace::matrix() const {
  const std::size_t m = g_ == nullptr ? 0 : g_->dim();
  return RatMatrix::from_columns(m, basis_);
}

bool Subspace::contains(const RatVector& v) const {
  if (basis_.empty()) {
    for (const auto& c : v)
      if (c != 0) return false;
    return true;
  }
  return solve(matrix(), v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

RatVector Subspace::coordinates(const RatVector& v) const {
  if (basis_.empty()) {
    if (!contains(v)) throw InvalidArgument("vector is not in the subspace");
    return {};
  }
  auto c = solve(matrix(), v);
  if (!c) throw InvalidArgument("vector is not in the subspace");
  return *c;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  std::vector<RatVector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace(a.algebra(), all);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.dim() == 0 || b.dim() == 0) return Subspace(a.algebra(), std::vector<RatVector>{});
  // solve sum c_i a_i - sum d_j b_j = 0
  const std::size_t m = a.algebra()->dim();
  RatMatrix M(m, a.dim() + b.dim());
  for (int k = 0; k < a.dim(); ++k)
    for (std::size_t i = 0; i < m; ++i) M(i, k) = a.basis()[k][i];
  for (int k = 0; k < b.dim(); ++k)
    for (std::size_t i = 0; i < m; ++i) M(i, a.dim() + k) = -b.basis()[k][i];
  std::vector<RatVector> out;
  for (const auto& v : kernel_basis(M)) {
    RatVector c(v.begin(), v.begin() + a.dim());
    out.push_back(a.combine(c));
  }
  return Subspace::from_independent(a.algebra(), std::move(out));
}

Subspace centralizer(const Subspace& ambient, const LieElement& x) {
  const LieAlgebra* g = ambient.algebra();
  if (x.algebra() != nullptr && x.algebra() != g) throw InvalidArgument("centralizer: element from another algebra");
  const RatVector xv = LieElement(g, x.dense()).dense();
  std::vector<RatVector> cols;
  for (const auto& b : ambient.basis()) cols.push_back(bracket_dense(*g, xv, b));
  const RatMatrix M = RatMatrix::from_columns(g->dim(), cols);
  std::vector<RatVector> out;
  for (const auto& c : kernel_basis(M)) out.push_back(ambient.combine(c));
  return Subspace::from_independent(g, std::move(out));
}

int centralizer_dim(const LieElement& z) {
  const LieAlgebra* g = z.algebra();
  if (g == nullptr) throw InvalidArgument("centralizer_dim: element has no algebra");
  return g->dim() - static_cast<int>(rank(ad_matrix(z)));
}

bool is_irregular(const LieAlgebra& g, const LieElement& z) {
  return centralizer_dim(LieElement(&g, z.dense())) > g.rank();
}

MuRankResult mu_rank_identity(const LieElement& a, const LieElement& b) {
  const LieAlgebra* g = a.algebra() != nullptr ? a.algebra() : b.algebra();
  if (g == nullptr) throw InvalidArgument("mu_rank_identity: elements have no algebra");
  const LieElement aa(g, a.dense());
  const LieElement bb(g, b.dense());
  const RatMatrix ada = ad_matrix(aa);
  const RatMatrix adb = ad_matrix(bb);
  const std::size_t m = g->dim();

  RatMatrix dmu(m, 2 * m);  // (u, v) -> [u, b] + [a, v] = -ad_b u + ad_a v
  RatMatrix images(m, 2 * m);
  RatMatrix stacked(2 * m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      dmu(i, j) = -adb(i, j);
      dmu(i, m + j) = ada(i, j);
      images(i, j) = ada(i, j);
      images(i, m + j) = adb(i, j);
      stacked(i, j) = ada(i, j);
      stacked(m + i, j) = adb(i, j);
    }
  MuRankResult r;
  r.rank_dmu = static_cast<int>(rank(dmu));
  r.dim_joint_centralizer = static_cast<int>(m - rank(stacked));
  r.dim_image_sum = static_cast<int>(rank(images));
  const int expect = static_cast<int>(m) - r.dim_joint_centralizer;
  r.identities_hold = r.rank_dmu == expect && r.dim_image_sum == expect;
  return r;
}

int orbit_closure_dim(const Subspace& c) {
  const LieAlgebra* g = c.algebra();
  int n = c.dim();
  std::vector<LieElement> basis;
  for (int k = 0; k < c.dim(); ++k) basis.push_back(c.element(k));
  for (int a = 0; a < g->roots().num_roots(); ++a)
    for (const auto& h : basis)
      if (g->root_value(a, h) != 0) {
        ++n;
        break;
      }
  return n;
}

LieElement random_element(const LieAlgebra& g, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  LieElement e(&g);
  for (int i = 0; i < g.dim(); ++i) e.add(i, d(rng));
  return e;
}

RatVector random_point(const Subspace& s, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  RatVector c(s.dim());
  for (auto& v : c) v = d(rng);
  return s.combine(c);
}

LieElement random_positive_nilpotent(const LieAlgebra& g, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  LieElement e(&g);
  for (int k = 0; k < g.roots().num_positive(); ++k) e.add(g.x_index(k), d(rng));
  return e;
}

}  // namespace commvar
