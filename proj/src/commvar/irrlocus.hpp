#pragma once

// The irregular set I(a_x) = {y in a_x : dim (a_x)_y > rk a} of a centralizer,
// measured by point counts over F_p and by exact ranks at random points.

#include <cstdint>
#include <vector>

#include "commvar/centralizers.hpp"
#include "commvar/modp.hpp"

namespace commvar {

/// a_x with its structure constants in a fixed basis.
///
/// The basis is the reduced row echelon form of the centralizer, so the
/// coordinates of w in a_x are the entries of w at the pivot positions.
class CentralizerAlgebra {
 public:
  /// `ambient` must be a subalgebra of rank `ambient_rank` containing x.
  CentralizerAlgebra(const Subspace& ambient, int ambient_rank, const LieElement& x);

  [[nodiscard]] const Subspace& space() const { return space_; }
  [[nodiscard]] const LieAlgebra& algebra() const { return *space_.algebra(); }
  [[nodiscard]] int dim() const { return d_; }
  [[nodiscard]] int ambient_rank() const { return rk_; }
  [[nodiscard]] const LieElement& x() const { return x_; }
  [[nodiscard]] bool ambient_is_whole() const { return whole_; }

  /// Coordinates in a_x of a vector of g; throws if v is not in a_x.
  [[nodiscard]] RatVector coordinates(const RatVector& v) const;
  [[nodiscard]] std::vector<GaussRational> coordinates(const std::vector<GaussRational>& v) const;
  [[nodiscard]] RatVector to_ambient(const RatVector& coords) const { return space_.combine(coords); }

  /// c_{ij}^k with [u_i, u_j] = sum_k c_{ij}^k u_k.
  [[nodiscard]] const Rational& constant(int i, int j, int k) const { return c_[(i * d_ + j) * d_ + k]; }

  /// Matrix of ad y on a_x; column j holds [y, u_j].
  [[nodiscard]] RatMatrix ad_matrix(const RatVector& coords) const;
  [[nodiscard]] int centralizer_dim(const RatVector& coords) const;
  [[nodiscard]] bool irregular_at(const RatVector& coords) const;
  [[nodiscard]] bool irregular_at(const std::vector<GaussRational>& coords) const;

  /// Center of a_x, as coordinate vectors in reduced echelon form.
  [[nodiscard]] const std::vector<RatVector>& center() const { return center_; }
  /// Coordinates spanning a complement of the center.
  [[nodiscard]] const std::vector<int>& complement() const { return complement_; }

  /// A_i = ad u_i mod p, row-major d x d each, so ad y = sum_i y_i A_i.
  [[nodiscard]] std::vector<std::vector<std::uint32_t>> reduced_ad(unsigned p) const;

 private:
  Subspace space_;
  LieElement x_;
  int rk_;
  int d_;
  bool whole_;
  std::vector<std::size_t> pivots_;
  std::vector<Rational> c_;
  std::vector<RatVector> center_;
  std::vector<int> complement_;
};

/// Largest point count the enumerations are allowed to visit per prime.
constexpr unsigned long long kCountBudget = 24137569ULL;  // 17^6

/// N_p by enumerating every point of a_x over F_p; requires dim <= 7 and
/// p^dim within budget.
unsigned long long exact_point_count(const CentralizerAlgebra& a, unsigned p, unsigned workers = 0);

/// N_p using translation by the center and scaling: N_p = p^k (1 + (p-1) M_p)
/// with M_p the number of irregular projective points in a complement.
unsigned long long reduced_point_count(const CentralizerAlgebra& a, unsigned p, unsigned workers = 0);

bool exhaustive_feasible(const CentralizerAlgebra& a, unsigned p);
bool reduced_feasible(const CentralizerAlgebra& a, unsigned p);

enum class CountMode { exhaustive, reduced, automatic };

struct LocusOptions {
  CountMode mode = CountMode::automatic;
  std::vector<unsigned> primes{5, 13, 17};
  unsigned workers = 0;
  std::uint64_t seed = 0;
};

/// dim I(a_x). The "empty" status is returned when x is regular in a.
/// For x = 0 in a whole simple algebra the dimension is m - 3, certified by
/// exact ranks on the sheets G(Ker alpha) (one per root length). When
/// counting is over budget, a regular witness in a_x certifies dim <= d - 1.
DimensionEstimate irregular_locus_dim(const CentralizerAlgebra& a, const LocusOptions& opts = {});

/// Minimal dim (a_x)_y over k random small-integer points, deterministic in seed.
int generic_centralizer_dim(const CentralizerAlgebra& a, int samples = 20, std::uint64_t seed = 0);

/// Dimension of G(Ker alpha) at a random point: rank of the differential of
/// G x Ker alpha -> g at points regular in Ker alpha, maximized over `samples` draws.
int sheet_dim_generic(const LieAlgebra& g, int root, int samples, std::uint64_t seed);

using GaussVector = std::vector<GaussRational>;

/// True iff `samples` random points of the span (vectors of g over Q(i)) lie in I(a_x).
bool verify_linear_component(const CentralizerAlgebra& a, const std::vector<GaussVector>& span, int samples = 50,
                             std::uint64_t seed = 0);

/// |U_1 u ... u U_n| over F_p for spans given over Q(i), via inclusion-exclusion.
/// sqrt(-1) is sent to the smallest square root of -1 mod p (p = 1 mod 4).
unsigned long long union_count_mod_p(const std::vector<std::vector<GaussVector>>& spans, unsigned p);

/// Smallest r in [0, p) with r^2 = -1 mod p; throws when none exists.
unsigned sqrt_minus_one(unsigned p);

}  // namespace commvar
