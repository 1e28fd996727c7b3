#include "commvar/sl2toric.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

namespace commvar {

namespace {

const LieAlgebra& sl2() {
  static const LieAlgebra g('A', 1);
  return g;
}

// (e, f, h) coordinates <-> Chevalley coordinates (H_1, X_a, X_-a).
RatVector to_chevalley(const Rational& e, const Rational& f, const Rational& h) { return {h, e, -f}; }

std::array<Rational, 3> from_chevalley(const RatVector& v) { return {v[1], -v[2], v[0]}; }

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// A basis of group(S): v in group(S) iff (U v)_i is divisible by d_i for i < k
// and vanishes beyond, and then (U v)_i / d_i are its coordinates.
struct LatticeBasis {
  IntMatrix u;
  std::vector<Integer> diag;
  int k = 0;

  [[nodiscard]] std::optional<std::vector<Integer>> coordinates(const std::vector<Integer>& v) const {
    std::vector<Integer> out(k);
    for (std::size_t i = 0; i < u.rows(); ++i) {
      Integer e = 0;
      for (std::size_t j = 0; j < v.size(); ++j) e += u(i, j) * v[j];
      if (static_cast<int>(i) >= k) {
        if (e != 0) return std::nullopt;
      } else {
        if (!mpz_divisible_p(e.get_mpz_t(), diag[i].get_mpz_t())) return std::nullopt;
        out[i] = e / diag[i];
      }
    }
    return out;
  }
};

LatticeBasis lattice_basis(const AffineSemigroup& s) {
  const auto amb = static_cast<std::size_t>(s.lattice_rank);
  IntMatrix g(amb, s.generators.size());
  for (std::size_t j = 0; j < s.generators.size(); ++j)
    for (std::size_t i = 0; i < amb; ++i) g(i, j) = s.generators[j][i];
  SmithForm snf = smith_normal_form(g);
  LatticeBasis out{std::move(snf.u), snf.diagonal(), 0};
  while (out.k < static_cast<int>(out.diag.size()) && out.diag[out.k] != 0) ++out.k;
  return out;
}

std::vector<std::vector<Integer>> lattice_coordinates(const AffineSemigroup& s, const LatticeBasis& basis) {
  std::vector<std::vector<Integer>> out;
  for (const auto& g : s.generators) {
    auto c = basis.coordinates(g);
    if (!c) throw std::logic_error("generator outside its own lattice");
    out.push_back(std::move(*c));
  }
  return out;
}

// A functional positive on every generator: the sum of the facet normals.
std::vector<Integer> positive_functional(const std::vector<std::vector<Integer>>& gens, int k) {
  std::vector<Integer> phi(k, 0);
  const int n = static_cast<int>(gens.size());
  std::set<std::vector<Integer>> normals;
  if (k == 1) {
    normals.insert({Integer(1)});
    normals.insert({Integer(-1)});
  } else {
    for (const auto& sub : subsets(n, k - 1)) {
      RatMatrix m(k - 1, k);
      for (int r = 0; r < k - 1; ++r)
        for (int c = 0; c < k; ++c) m(r, c) = gens[sub[r]][c];
      const auto ker = kernel_basis(m);
      if (ker.size() != 1) continue;
      const RatVector prim = primitive(ker[0]);
      std::vector<Integer> nv(k);
      for (int c = 0; c < k; ++c) nv[c] = prim[c].get_num();
      normals.insert(nv);
      for (auto& e : nv) e = -e;
      normals.insert(nv);
    }
  }
  for (const auto& nv : normals) {
    const bool facet = std::all_of(gens.begin(), gens.end(), [&](const auto& g) { return dot(nv, g) >= 0; });
    if (!facet) continue;
    for (int c = 0; c < k; ++c) phi[c] += nv[c];
  }
  for (const auto& g : gens)
    if (dot(phi, g) <= 0) throw InvalidArgument("the cone of the semigroup is not pointed");
  return phi;
}

bool contains_bounded(const std::vector<std::vector<Integer>>& gens, const std::vector<Integer>& phi,
                      std::vector<Integer> v, std::size_t j) {
  if (std::all_of(v.begin(), v.end(), [](const Integer& e) { return e == 0; })) return true;
  if (j == gens.size()) return false;
  const Integer budget = dot(phi, v);
  if (budget < 0) return false;
  const Integer step = dot(phi, gens[j]);
  for (Integer c = 0; c * step <= budget; ++c) {
    if (contains_bounded(gens, phi, v, j + 1)) return true;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= gens[j][i];
  }
  return false;
}

void check_semigroup(const AffineSemigroup& s) {
  if (s.lattice_rank <= 0) throw InvalidArgument("lattice rank must be positive");
  if (s.generators.empty()) throw InvalidArgument("a semigroup needs at least one generator");
  for (const auto& g : s.generators) {
    if (static_cast<int>(g.size()) != s.lattice_rank) throw InvalidArgument("generator has the wrong length");
    if (std::all_of(g.begin(), g.end(), [](const Integer& e) { return e == 0; }))
      throw InvalidArgument("generators must be nonzero");
  }
}

}  // namespace

Rational Polynomial::operator()(const Sl2Point& p) const {
  Rational s = 0;
  for (const auto& t : terms) s += t.coeff * p[t.a] * p[t.b];
  return s;
}

std::array<Rational, 6> Polynomial::gradient(const Sl2Point& p) const {
  std::array<Rational, 6> g;
  for (auto& e : g) e = 0;
  for (const auto& t : terms) {
    g[t.a] += t.coeff * p[t.b];
    g[t.b] += t.coeff * p[t.a];
  }
  return g;
}

std::array<Polynomial, 3> ideal_generators() {
  return {Polynomial{"x2*y3 - x3*y2", {{1, 1, 5}, {-1, 2, 4}}},
          Polynomial{"x1*y2 - x2*y1", {{1, 0, 4}, {-1, 1, 3}}},
          Polynomial{"x1*y3 - x3*y1", {{1, 0, 5}, {-1, 2, 3}}}};
}

std::array<Rational, 3> sl2_bracket_coordinates(const Sl2Point& p) {
  const LieAlgebra& g = sl2();
  const LieElement x(&g, to_chevalley(p[0], p[1], p[2]));
  const LieElement y(&g, to_chevalley(p[3], p[4], p[5]));
  return from_chevalley(bracket(x, y).dense());
}

int jacobian_rank(const Sl2Point& p) {
  RatMatrix j(3, 6);
  const auto gens = ideal_generators();
  for (int r = 0; r < 3; ++r) {
    const auto grad = gens[r].gradient(p);
    for (int c = 0; c < 6; ++c) j(r, c) = grad[c];
  }
  return static_cast<int>(rank(j));
}

Sl2Point random_point_on_c(std::mt19937_64& rng) {
  const LieAlgebra& g = sl2();
  std::uniform_int_distribution<int> coord(-4, 4);
  RatVector xv;
  do {
    xv = to_chevalley(coord(rng), coord(rng), coord(rng));
  } while (std::all_of(xv.begin(), xv.end(), [](const Rational& e) { return e == 0; }));
  int lambda = coord(rng);
  LieElement x(&g, xv);
  LieElement y = Rational(lambda) * x;
  if (rng() % 4 == 0) std::swap(x, y);
  const LieElement n = Rational(coord(rng)) * g.basis(1 + static_cast<int>(rng() % 2));
  x = exp_ad(n, x);
  y = exp_ad(n, y);
  if (x.is_zero() && y.is_zero()) return random_point_on_c(rng);
  const auto a = from_chevalley(x.dense());
  const auto b = from_chevalley(y.dense());
  return {a[0], a[1], a[2], b[0], b[1], b[2]};
}

IntMatrix torus_relations() {
  IntMatrix r(2, 6);
  const int rows[2][6] = {{1, -1, 0, -1, 1, 0}, {1, 0, -1, -1, 0, 1}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 6; ++j) r(i, j) = rows[i][j];
  return r;
}

std::vector<std::vector<Integer>> quotient_images(const std::vector<std::vector<Integer>>& vectors) {
  const SmithForm snf = smith_normal_form(torus_relations().transpose());
  const auto diag = snf.diagonal();
  if (diag.size() != 2 || diag[0] != 1 || diag[1] != 1) throw std::logic_error("relation lattice is not primitive");
  std::vector<std::vector<Integer>> out;
  for (const auto& v : vectors) {
    if (v.size() != 6) throw InvalidArgument("quotient_images expects vectors of length 6");
    std::vector<Integer> img(4, 0);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 6; ++j) img[i] += snf.u(i + 2, j) * v[j];
    out.push_back(std::move(img));
  }
  return out;
}

AffineSemigroup torus_semigroup() {
  std::vector<std::vector<Integer>> basis(6, std::vector<Integer>(6, 0));
  for (int i = 0; i < 6; ++i) basis[i][i] = 1;
  return {4, quotient_images(basis)};
}

bool semigroup_contains(const AffineSemigroup& s, const std::vector<Integer>& v) {
  check_semigroup(s);
  if (static_cast<int>(v.size()) != s.lattice_rank) throw InvalidArgument("vector has the wrong length");
  const LatticeBasis basis = lattice_basis(s);
  const auto target = basis.coordinates(v);
  if (!target) return false;
  const auto gens = lattice_coordinates(s, basis);
  return contains_bounded(gens, positive_functional(gens, basis.k), *target, 0);
}

bool is_saturated(const AffineSemigroup& s) {
  check_semigroup(s);
  const LatticeBasis basis = lattice_basis(s);
  const int k = basis.k;
  const auto gens = lattice_coordinates(s, basis);
  const auto phi = positive_functional(gens, k);
  const int n = static_cast<int>(gens.size());
  for (const auto& sub : subsets(n, k)) {
    IntMatrix b(k, k);
    for (int c = 0; c < k; ++c)
      for (int r = 0; r < k; ++r) b(r, c) = gens[sub[c]][r];
    if (determinant(b) == 0) continue;
    const SmithForm snf = smith_normal_form(b);
    const auto diag = snf.diagonal();
    const IntMatrix uinv = unimodular_inverse(snf.u);
    const RatMatrix brat = to_rational(b);
    // Representatives of Z^k / B Z^k are U^{-1} a with 0 <= a_i < d_i.
    std::vector<Integer> a(k, 0);
    for (;;) {
      RatVector z(k, 0);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) z[r] += Rational(uinv(r, c) * a[c]);
      auto t = solve(brat, z);
      if (!t) throw std::logic_error("nonsingular system without solution");
      // p = B frac(B^{-1} z) is the point of the half-open parallelepiped congruent to z.
      std::vector<Integer> p(k, 0);
      for (int r = 0; r < k; ++r) {
        Rational e = 0;
        for (int c = 0; c < k; ++c) {
          Integer fl;
          mpz_fdiv_q(fl.get_mpz_t(), (*t)[c].get_num_mpz_t(), (*t)[c].get_den_mpz_t());
          e += ((*t)[c] - Rational(fl)) * Rational(b(r, c));
        }
        if (e.get_den() != 1) throw std::logic_error("parallelepiped point is not integral");
        p[r] = e.get_num();
      }
      if (!contains_bounded(gens, phi, p, 0)) return false;
      int i = 0;
      while (i < k) {
        if (++a[i] < diag[i]) break;
        a[i] = 0;
        ++i;
      }
      if (i == k) break;
    }
  }
  return true;
}

}  // namespace commvar
