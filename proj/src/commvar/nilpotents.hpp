#pragma once

// Nilpotent orbit representatives in Levi factors: type A via partitions,
// B2 and G2 via named orbits.

#include <stdexcept>
#include <string>
#include <vector>

#include "commvar/centralizers.hpp"

namespace commvar {

using Partition = std::vector<int>;

/// Raised when a Levi factor has no implemented orbit list.
class UnsupportedFactor : public std::runtime_error {
 public:
  explicit UnsupportedFactor(const std::string& factor)
      : std::runtime_error("unsupported Levi factor " + factor), factor_(factor) {}
  [[nodiscard]] const std::string& factor() const { return factor_; }

 private:
  std::string factor_;
};

/// All partitions of n, largest parts first, in decreasing lexicographic order.
std::vector<Partition> partitions(int n);
void validate_partition(const Partition& p, int n);
std::string partition_label(const Partition& p);

/// Classical value sum_i (2i - 1) d_i - 1 of dim (sl_n)_x for x of Jordan type d.
int sl_centralizer_dim_formula(const Partition& d);

/// Orbit of one simple factor: a partition for type A, a name for B2/G2.
struct FactorOrbit {
  SimpleFactor factor;
  std::string orbit;    // "[2,1]", "0", "min", "subreg", "reg"
  Partition partition;  // type A only

  [[nodiscard]] std::string label() const { return factor.label() + orbit; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_regular() const;
};

struct NilpotentRep {
  std::string label;
  LieElement element;
  std::vector<std::string> factor_signature;
  std::vector<FactorOrbit> parts;
};

/// Orbits listed for one factor. `complete` is false when the list misses orbits.
struct OrbitList {
  std::vector<FactorOrbit> orbits;
  bool complete = true;
};

OrbitList factor_orbits(const SimpleFactor& f);

/// Realizes an orbit inside g on the factor's nodes.
LieElement embed_orbit(const LieAlgebra& g, const FactorOrbit& o);

/// The zero element, for factors of any type.
NilpotentRep zero_rep(const LieAlgebra& g, const std::vector<SimpleFactor>& factors);

/// x = diag(J_d1, ..., J_ds) in sl_n, g of type A_{n-1}.
NilpotentRep type_a_rep(const LieAlgebra& g, const Partition& d);

/// zero, X_a1 (long), X_a2 (short, subregular), X_a1 + X_a2 (regular); g = B2.
std::vector<NilpotentRep> b2_reps(const LieAlgebra& g);

/// X_a2 + X_{3a1+a2}; g = G2.
NilpotentRep g2_subregular(const LieAlgebra& g);

/// Cartesian product of the factor orbit lists, embedded in g. Throws
/// UnsupportedFactor for factors other than A, B2 and G2. `complete` reports
/// whether every factor lists all of its orbits.
std::vector<NilpotentRep> direct_sum_reps(const LieAlgebra& g, const std::vector<SimpleFactor>& factors,
                                          bool* complete = nullptr);

/// Integers a_1 > ... > a_s with sum d_i a_i = 0 (s >= 2).
std::vector<long> lemma_aaa_h(const Partition& d);

/// The Cartan element diag(a_1 I_d1, ...) of sl_n in simple coroot coordinates.
LieElement lemma_aaa_element(const LieAlgebra& g, const Partition& d);

}  // namespace commvar
