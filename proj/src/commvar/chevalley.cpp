#include "commvar/chevalley.hpp"

#include <sstream>
#include <string>

namespace commvar {

// ---------------------------------------------------------------------------
// LieElement

LieElement::LieElement(const LieAlgebra* alg, const RatVector& dense) : alg_(alg) {
  if (alg != nullptr && static_cast<int>(dense.size()) != alg->dim())
    throw InvalidArgument("LieElement: coordinate vector has wrong length");
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) coeffs_.emplace(static_cast<int>(i), dense[i]);
}

Rational LieElement::coeff(int i) const {
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

RatVector LieElement::dense() const {
  if (alg_ == nullptr) throw InvalidArgument("LieElement: element has no algebra");
  RatVector v(alg_->dim());
  for (const auto& [i, c] : coeffs_) v[i] = c;
  return v;
}

void LieElement::add(int index, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

void LieElement::check_same(const LieElement& o) const {
  if (alg_ != nullptr && o.alg_ != nullptr && alg_ != o.alg_)
    throw InvalidArgument("elements belong to different Lie algebras");
}

LieElement& LieElement::operator+=(const LieElement& o) {
  check_same(o);
  if (alg_ == nullptr) alg_ = o.alg_;
  for (const auto& [i, c] : o.coeffs_) add(i, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  check_same(o);
  if (alg_ == nullptr) alg_ = o.alg_;
  for (const auto& [i, c] : o.coeffs_) add(i, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [i, c] : coeffs_) c *= s;
  return *this;
}

// ---------------------------------------------------------------------------
// Structure constants

int root_string_down(const RootSystem& rs, int a, int b) {
  const auto& va = rs.roots()[a];
  RootVec v = rs.roots()[b];
  int p = 0;
  for (;;) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= va[i];
    if (rs.index_of(v) < 0) return p;
    ++p;
  }
}

long cyclic_relation_violations(const LieAlgebra& g) {
  const RootSystem& rs = g.roots();
  const int n = rs.num_roots();
  const auto len = [&](int k) { return static_cast<long>(rs.inner(rs.roots()[k], rs.roots()[k])); };
  long bad = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      RootVec sum = rs.roots()[a];
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += rs.roots()[b][i];
      const int ab = rs.index_of(sum);
      if (ab < 0) continue;
      const int c = rs.negative_of(ab);
      // N_ab / |c|^2 = N_bc / |a|^2 = N_ca / |b|^2
      const long x = g.structure_constant(a, b) * len(a) * len(b);
      const long y = g.structure_constant(b, c) * len(b) * len(c);
      const long z = g.structure_constant(c, a) * len(c) * len(a);
      if (x != y || y != z) ++bad;
    }
  return bad;
}

namespace {

RootVec add_roots(const RootVec& a, const RootVec& b) {
  RootVec s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

// Constants of the unscaled basis e_a with positive extraspecial pairs.
class CarterTable {
 public:
  explicit CarterTable(const RootSystem& rs) : rs_(rs), np_(rs.num_positive()), pos_(np_ * np_) {
    for (int xi = 0; xi < np_; ++xi) {
      if (rs_.height(xi) == 1) continue;
      std::vector<std::pair<int, int>> pairs;
      for (int a = 0; a < np_; ++a) {
        RootVec diff = rs_.roots()[xi];
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= rs_.roots()[a][i];
        const int b = rs_.index_of(diff);
        if (b >= 0 && b < np_ && a < b) pairs.emplace_back(a, b);
      }
      const auto [zeta, zeta2] = pairs.front();
      const int p = root_string_down(rs_, zeta, zeta2);
      set_pos(zeta, zeta2, Rational(p + 1));
      const Rational len_xi = rs_.inner(rs_.roots()[xi], rs_.roots()[xi]);
      const int mz = rs_.negative_of(zeta);
      const int mz2 = rs_.negative_of(zeta2);
      for (std::size_t k = 1; k < pairs.size(); ++k) {
        const auto [a, b] = pairs[k];
        Rational acc = 0;
        const RootVec bz = add_roots(rs_.roots()[b], rs_.roots()[mz]);
        if (rs_.index_of(bz) >= 0) acc += get(b, mz) * get(a, mz2) / rs_.inner(bz, bz);
        const RootVec az = add_roots(rs_.roots()[a], rs_.roots()[mz]);
        if (rs_.index_of(az) >= 0) acc += get(mz, a) * get(b, mz2) / rs_.inner(az, az);
        set_pos(a, b, len_xi / Rational(p + 1) * acc);
      }
    }
  }

  // N_{a,b} for arbitrary root indices.
  Rational get(int a, int b) const {
    const RootVec s = add_roots(rs_.roots()[a], rs_.roots()[b]);
    const int c = rs_.index_of(s);
    if (c < 0) return 0;
    const bool pa = rs_.is_positive(a);
    const bool pb = rs_.is_positive(b);
    if (pa && pb) return pos_[a * np_ + b];
    if (!pa && !pb) return -get(rs_.negative_of(a), rs_.negative_of(b));
    if (!pa && pb) return -get(b, a);
    const Rational lc = rs_.inner(s, s);
    if (rs_.is_positive(c)) {
      const Rational la = rs_.inner(rs_.roots()[a], rs_.roots()[a]);
      return -lc / la * get(rs_.negative_of(b), c);
    }
    const Rational lb = rs_.inner(rs_.roots()[b], rs_.roots()[b]);
    return lc / lb * get(rs_.negative_of(c), a);
  }

 private:
  void set_pos(int a, int b, const Rational& v) {
    pos_[a * np_ + b] = v;
    pos_[b * np_ + a] = -v;
  }

  const RootSystem& rs_;
  int np_;
  std::vector<Rational> pos_;
};

}  // namespace

LieAlgebra::LieAlgebra(std::shared_ptr<const RootSystem> rs, BuildOptions opts) : rs_(std::move(rs)), opts_(opts) {
  r_ = rs_->rank();
  nroots_ = rs_->num_roots();
  m_ = r_ + nroots_;
  build_constants();
  build_table();
}

LieAlgebra::LieAlgebra(char type, int rank, BuildOptions opts)
    : LieAlgebra(std::make_shared<const RootSystem>(type, rank), opts) {}

void LieAlgebra::build_constants() {
  const RootSystem& rs = *rs_;
  const CarterTable carter(rs);
  n_.assign(static_cast<std::size_t>(nroots_) * nroots_, 0);
  auto eps = [&](int k) { return rs.is_positive(k) ? 1 : -1; };
  for (int a = 0; a < nroots_; ++a)
    for (int b = 0; b < nroots_; ++b) {
      const int c = rs.index_of(add_roots(rs.roots()[a], rs.roots()[b]));
      if (c < 0) continue;
      const Rational v = carter.get(a, b) * (eps(a) * eps(b) * eps(c));
      if (v.get_den() != 1) throw std::logic_error("non-integral structure constant for " + basis_name(r_ + a));
      const int n = static_cast<int>(v.get_num().get_si());
      if (std::abs(n) != root_string_down(rs, a, b) + 1)
        throw std::logic_error("structure constant violates the root-string rule");
      n_[a * nroots_ + b] = n;
    }
  if (opts_.tamper) {
    for (std::size_t k = 0; k < n_.size(); ++k)
      if (n_[k] != 0) {
        const int a = static_cast<int>(k) / nroots_;
        const int b = static_cast<int>(k) % nroots_;
        n_[a * nroots_ + b] = -n_[a * nroots_ + b];
        n_[b * nroots_ + a] = -n_[b * nroots_ + a];
        break;
      }
  }
}

void LieAlgebra::build_table() {
  const RootSystem& rs = *rs_;
  offsets_.assign(static_cast<std::size_t>(m_) * m_ + 1, 0);
  table_.clear();
  std::vector<std::vector<int>> coroots(nroots_);
  for (int k = 0; k < nroots_; ++k) coroots[k] = rs.coroot(k);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) {
      offsets_[static_cast<std::size_t>(i) * m_ + j] = static_cast<std::uint32_t>(table_.size());
      const int a = root_of(i);
      const int b = root_of(j);
      if (a < 0 && b < 0) continue;
      if (a < 0) {
        const int v = rs.pairing(rs.roots()[b], i);
        if (v != 0) table_.emplace_back(j, v);
        continue;
      }
      if (b < 0) {
        const int v = rs.pairing(rs.roots()[a], j);
        if (v != 0) table_.emplace_back(i, -v);
        continue;
      }
      if (b == rs.negative_of(a)) {
        // [X_-c, X_c] = H_c for c > 0
        const int sign = rs.is_positive(a) ? -1 : 1;
        const auto& h = coroots[rs.is_positive(a) ? a : b];
        for (int t = 0; t < r_; ++t)
          if (h[t] != 0) table_.emplace_back(t, sign * h[t]);
        continue;
      }
      const int n = n_[a * nroots_ + b];
      if (n != 0) table_.emplace_back(x_index(rs.index_of(add_roots(rs.roots()[a], rs.roots()[b]))), n);
    }
  offsets_.back() = static_cast<std::uint32_t>(table_.size());
}

LieElement LieAlgebra::basis(int i) const {
  if (i < 0 || i >= m_) throw InvalidArgument("basis index out of range");
  LieElement e(this);
  e.add(i, 1);
  return e;
}

LieElement LieAlgebra::x(const RootVec& root) const {
  const int k = rs_->index_of(root);
  if (k < 0) throw InvalidArgument("not a root");
  return basis(x_index(k));
}

LieElement LieAlgebra::h_root(const RootVec& root) const {
  const int k = rs_->index_of(root);
  if (k < 0) throw InvalidArgument("not a root");
  const auto c = rs_->coroot(k);
  LieElement e(this);
  for (int i = 0; i < r_; ++i) e.add(i, c[i]);
  return e;
}

Rational LieAlgebra::root_value(int root, const LieElement& h) const {
  Rational v = 0;
  for (const auto& [i, c] : h.coeffs()) {
    if (i >= r_) throw InvalidArgument("root_value: element is not in the Cartan subalgebra");
    v += c * rs_->pairing(rs_->roots()[root], i);
  }
  return v;
}

std::string LieAlgebra::basis_name(int i) const {
  if (i < r_) return "H" + std::to_string(i + 1);
  std::ostringstream os;
  os << "X(";
  const auto& v = rs_->roots()[i - r_];
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Operations

LieElement bracket(const LieElement& x, const LieElement& y) {
  const LieAlgebra* g = x.algebra() != nullptr ? x.algebra() : y.algebra();
  if (x.algebra() != nullptr && y.algebra() != nullptr && x.algebra() != y.algebra())
    throw InvalidArgument("bracket: elements belong to different Lie algebras");
  LieElement out(g);
  if (g == nullptr) return out;
  for (const auto& [i, a] : x.coeffs())
    for (const auto& [j, b] : y.coeffs()) {
      auto [lo, hi] = g->basis_bracket(i, j);
      for (auto it = lo; it != hi; ++it) out.add(it->first, a * b * it->second);
    }
  return out;
}

RatVector bracket_dense(const LieAlgebra& g, const RatVector& x, const RatVector& y) {
  RatVector out(g.dim());
  for (int i = 0; i < g.dim(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < g.dim(); ++j) {
      if (y[j] == 0) continue;
      auto [lo, hi] = g.basis_bracket(i, j);
      if (lo == hi) continue;
      const Rational ab = x[i] * y[j];
      for (auto it = lo; it != hi; ++it) out[it->first] += ab * it->second;
    }
  }
  return out;
}

RatMatrix ad_matrix(const LieElement& x) {
  const LieAlgebra* g = x.algebra();
  if (g == nullptr) throw InvalidArgument("ad_matrix: element has no algebra");
  RatMatrix a(g->dim(), g->dim());
  for (const auto& [i, c] : x.coeffs())
    for (int j = 0; j < g->dim(); ++j) {
      auto [lo, hi] = g->basis_bracket(i, j);
      for (auto it = lo; it != hi; ++it) a(it->first, j) += c * it->second;
    }
  return a;
}

namespace {

int nilpotency_bound(const LieAlgebra& g) {
  const RootSystem& rs = g.roots();
  return 2 * rs.height(rs.num_positive() - 1) + 2;
}

}  // namespace

bool is_ad_nilpotent(const LieElement& x) {
  const LieAlgebra* g = x.algebra();
  if (g == nullptr || x.is_zero()) return true;
  const int bound = nilpotency_bound(*g);
  for (int j = 0; j < g->dim(); ++j) {
    LieElement v = g->basis(j);
    int k = 0;
    while (!v.is_zero() && k <= bound) {
      v = bracket(x, v);
      ++k;
    }
    if (!v.is_zero()) return false;
  }
  return true;
}

LieElement exp_ad(const LieElement& n, const LieElement& z) {
  const LieAlgebra* g = n.algebra() != nullptr ? n.algebra() : z.algebra();
  if (g == nullptr) return z;
  const int bound = nilpotency_bound(*g);
  LieElement out = z;
  LieElement term = z;
  for (int k = 1; !term.is_zero(); ++k) {
    if (k > bound) throw InvalidArgument("exp_ad: ad n is not nilpotent");
    term = bracket(n, term);
    term *= Rational(1, k);
    out += term;
  }
  return out;
}

bool sl2_triple_check(const LieElement& e, const LieElement& f, const LieElement& h) {
  return bracket(h, e) == Rational(2) * e && bracket(h, f) == Rational(-2) * f && bracket(e, f) == h;
}

LieElement jacobi_defect(const LieAlgebra& g, int i, int j, int k) {
  const LieElement x = g.basis(i);
  const LieElement y = g.basis(j);
  const LieElement z = g.basis(k);
  return bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y);
}

}  // namespace commvar
