#pragma once

// Subspaces of a Lie algebra, centralizers and regularity.

#include <random>
#include <vector>

#include "commvar/chevalley.hpp"

namespace commvar {

/// A linear subspace of g given by linearly independent coordinate vectors.
class Subspace {
 public:
  Subspace() = default;
  /// Spans the given vectors, dropping dependent ones.
  Subspace(const LieAlgebra* g, const std::vector<RatVector>& spanning);
  Subspace(const LieAlgebra* g, const std::vector<LieElement>& spanning);

  /// Trusts the caller that `basis` is linearly independent.
  static Subspace from_independent(const LieAlgebra* g, std::vector<RatVector> basis);
  static Subspace whole(const LieAlgebra& g);
  static Subspace cartan(const LieAlgebra& g);

  [[nodiscard]] const LieAlgebra* algebra() const { return g_; }
  [[nodiscard]] int dim() const { return static_cast<int>(basis_.size()); }
  [[nodiscard]] const std::vector<RatVector>& basis() const { return basis_; }
  [[nodiscard]] LieElement element(int i) const { return LieElement(g_, basis_[i]); }
  /// sum_i c_i b_i
  [[nodiscard]] RatVector combine(const RatVector& c) const;

  [[nodiscard]] bool contains(const RatVector& v) const;
  [[nodiscard]] bool contains(const Subspace& other) const;
  /// Coordinates of v in this basis (throws if v is not in the subspace).
  [[nodiscard]] RatVector coordinates(const RatVector& v) const;

  /// m x dim matrix whose columns are the basis vectors.
  [[nodiscard]] RatMatrix matrix() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.g_ == b.g_ && a.dim() == b.dim() && a.contains(b);
  }

 private:
  const LieAlgebra* g_ = nullptr;
  std::vector<RatVector> basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

/// {y in ambient : [x, y] = 0}.
Subspace centralizer(const Subspace& ambient, const LieElement& x);

/// dim g_z, computed as m - rank(ad z).
int centralizer_dim(const LieElement& z);

/// dim g_z > r.
bool is_irregular(const LieAlgebra& g, const LieElement& z);

struct MuRankResult {
  int rank_dmu = 0;            // rank of (u, v) -> [u, b] + [a, v]
  int dim_joint_centralizer = 0;
  int dim_image_sum = 0;       // dim([g, a] + [g, b])
  bool identities_hold = false;
};

MuRankResult mu_rank_identity(const LieElement& a, const LieElement& b);

/// dim c + #{roots not vanishing identically on c}, for c inside the Cartan subalgebra.
int orbit_closure_dim(const Subspace& c);

/// Random element with integer coordinates in [-range, range].
LieElement random_element(const LieAlgebra& g, std::mt19937_64& rng, int range = 5);
/// Random element of a subspace, coordinates in [-range, range] over its basis.
RatVector random_point(const Subspace& s, std::mt19937_64& rng, int range = 5);
/// Random element of the span of the positive root vectors.
LieElement random_positive_nilpotent(const LieAlgebra& g, std::mt19937_64& rng, int range = 2);

}  // namespace commvar
