#pragma once

// Simple Lie algebras in a Chevalley basis.
//
// Basis order: H_1..H_r (simple coroots), then X_alpha for the roots in the
// order of RootSystem::roots(). Conventions:
//
//   [H_i, X_a]   = <a, alpha_i^vee> X_a
//   [X_-a, X_a]  = H_a            for a > 0, H_a the coroot of a
//   [X_a, X_b]   = N_{a,b} X_{a+b}
//
// The constants are produced by the extraspecial-pair algorithm (every
// extraspecial pair gets a positive sign) and then rescaled by X_a -> -X_a on
// negative roots.

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "commvar/exact.hpp"
#include "commvar/rootsystem.hpp"

namespace commvar {

class LieAlgebra;

/// Sparse exact element of a LieAlgebra. Zero coefficients are never stored.
class LieElement {
 public:
  LieElement() = default;
  explicit LieElement(const LieAlgebra* alg) : alg_(alg) {}
  LieElement(const LieAlgebra* alg, const RatVector& dense);

  [[nodiscard]] const LieAlgebra* algebra() const { return alg_; }
  [[nodiscard]] const std::map<int, Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] Rational coeff(int i) const;
  [[nodiscard]] RatVector dense() const;

  void add(int index, const Rational& c);

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rational& s);

  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& s, LieElement a) { return a *= s; }
  friend bool operator==(const LieElement& a, const LieElement& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void check_same(const LieElement& o) const;

  const LieAlgebra* alg_ = nullptr;
  std::map<int, Rational> coeffs_;
};

struct BuildOptions {
  /// Flips the sign of one structure constant (fault injection for tests).
  bool tamper = false;
};

class LieAlgebra {
 public:
  explicit LieAlgebra(std::shared_ptr<const RootSystem> rs, BuildOptions opts = {});
  LieAlgebra(char type, int rank, BuildOptions opts = {});

  LieAlgebra(const LieAlgebra&) = delete;
  LieAlgebra& operator=(const LieAlgebra&) = delete;

  [[nodiscard]] const RootSystem& roots() const { return *rs_; }
  [[nodiscard]] std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }
  [[nodiscard]] int dim() const { return m_; }
  [[nodiscard]] int rank() const { return r_; }

  [[nodiscard]] int h_index(int i) const { return i; }
  [[nodiscard]] int x_index(int root) const { return r_ + root; }
  /// Root index of a basis vector, or -1 for a Cartan basis vector.
  [[nodiscard]] int root_of(int basis) const { return basis < r_ ? -1 : basis - r_; }

  /// N_{a,b} for root indices (0 if a+b is not a root).
  [[nodiscard]] int structure_constant(int a, int b) const { return n_[a * nroots_ + b]; }

  /// Bracket of two basis vectors as a sparse integer combination.
  [[nodiscard]] std::pair<const std::pair<int, int>*, const std::pair<int, int>*> basis_bracket(int i, int j) const {
    const auto k = static_cast<std::size_t>(i) * m_ + j;
    return {table_.data() + offsets_[k], table_.data() + offsets_[k + 1]};
  }

  [[nodiscard]] LieElement zero() const { return LieElement(this); }
  [[nodiscard]] LieElement basis(int i) const;
  [[nodiscard]] LieElement x(const RootVec& root) const;
  [[nodiscard]] LieElement h_simple(int i) const { return basis(h_index(i)); }
  /// The coroot H_a of any root a (H_{-a} = -H_a).
  [[nodiscard]] LieElement h_root(const RootVec& root) const;

  /// Value of the root with index `root` on a Cartan element.
  [[nodiscard]] Rational root_value(int root, const LieElement& h) const;

  [[nodiscard]] std::string basis_name(int i) const;

 private:
  void build_constants();
  void build_table();

  std::shared_ptr<const RootSystem> rs_;
  BuildOptions opts_;
  int r_ = 0;
  int m_ = 0;
  int nroots_ = 0;
  std::vector<int> n_;
  std::vector<std::pair<int, int>> table_;
  std::vector<std::uint32_t> offsets_;
};

LieElement bracket(const LieElement& x, const LieElement& y);

/// Bracket on dense coordinate vectors.
RatVector bracket_dense(const LieAlgebra& g, const RatVector& x, const RatVector& y);

/// Matrix of ad x: column j holds the coordinates of [x, b_j].
RatMatrix ad_matrix(const LieElement& x);

/// exp(ad n) z; n must have nilpotent adjoint action (checked).
LieElement exp_ad(const LieElement& n, const LieElement& z);

/// True iff ad x is nilpotent (exact check on the power ad^m).
bool is_ad_nilpotent(const LieElement& x);

/// [h,e] = 2e, [h,f] = -2f and [e,f] = h.
bool sl2_triple_check(const LieElement& e, const LieElement& f, const LieElement& h);

/// [[x,y],z] + [[y,z],x] + [[z,x],y] for basis vectors.
LieElement jacobi_defect(const LieAlgebra& g, int i, int j, int k);

/// Pairs (a, b) with c = -a-b a root that break N_ab / |c|^2 = N_bc / |a|^2 = N_ca / |b|^2.
long cyclic_relation_violations(const LieAlgebra& g);

/// Largest p with b - p a a root.
int root_string_down(const RootSystem& rs, int a, int b);

}  // namespace commvar
