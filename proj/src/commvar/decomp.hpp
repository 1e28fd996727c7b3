#pragma once

// Decomposition classes D(I, x) = G(t(I)^reg + x) and the search for the
// codimension of the irregular part of the commuting variety.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "commvar/irrlocus.hpp"
#include "commvar/nilpotents.hpp"

namespace commvar {

struct LeviData {
  std::vector<int> subset;
  Subsystem subsystem;
  Subspace t_I;  // joint kernel of I in the Cartan subalgebra
  Subspace s_I;  // span of X_a (a in Phi(I)) and H_a (a in I)
  Subspace g_I;  // t(I) + s(I)
  bool direct = false;  // t(I) and s(I) intersect trivially and span g(I)
};

LeviData levi_data(const LieAlgebra& g, const std::vector<int>& subset);

/// codim_{a_x} I(a_x) for one simple factor a and a nilpotent orbit of it.
struct FactorCodim {
  std::string key;  // e.g. "B2min"
  bool irregular = false;
  int dim_ax = 0;
  int codim = 0;
  bool exact = true;  // false: codim is only a lower bound
  DimensionEstimate estimate;
};

/// Memoizes factor codimensions by factor type and orbit label; thread safe.
class FactorCodimCache {
 public:
  explicit FactorCodimCache(LocusOptions opts = {}, BuildOptions build = {}) : opts_(std::move(opts)), build_(build) {}
  FactorCodim get(const FactorOrbit& orbit);
  [[nodiscard]] const LocusOptions& options() const { return opts_; }

 private:
  LocusOptions opts_;
  BuildOptions build_;
  std::mutex mu_;
  std::map<std::string, FactorCodim> cache_;
  std::map<std::string, std::shared_ptr<LieAlgebra>> algebras_;
};

struct DecompClassDescriptor {
  std::vector<int> subset;
  std::string signature;
  NilpotentRep rep;
  int dim_tI = 0;
  int dim_sIx = 0;
  int dim_class = 0;
  bool irregular = false;
  std::optional<int> c_value;  // only for irregular classes
  bool c_exact = true;
  std::vector<FactorCodim> factors;
};

DecompClassDescriptor class_descriptor(const LieAlgebra& g, const LeviData& levi, const NilpotentRep& rep,
                                       FactorCodimCache& cache);

/// c(I, x) = codim I(s(I)_x) + |I|; nullopt for regular x.
std::optional<int> c_value(const LieAlgebra& g, const std::vector<int>& subset, const NilpotentRep& rep,
                           FactorCodimCache& cache);

struct IrrCodimResult {
  int codim = 0;
  std::vector<DecompClassDescriptor> ledger;
  std::string reason;
};

/// Raised when the search cannot reach a verdict (never a silent guess).
class UndeterminedResult : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// codim_C C^irr for a simple algebra. Subsets I with |I| <= 3 are grouped by
/// the type of their Dynkin subdiagram. Classes with |I| = 3 are examined only
/// when no c in {2, 3} turned up for |I| <= 2.
IrrCodimResult commvar_irr_codim(const LieAlgebra& g, FactorCodimCache& cache);
IrrCodimResult commvar_irr_codim(const LieAlgebra& g);

/// dim I(g(I)_x) against r - |I| + dim I(s(I)_x), both from point counts.
struct LeviLocusCheck {
  DimensionEstimate g_I;
  DimensionEstimate s_I;
  int lhs = 0;
  int rhs = 0;
  bool holds = false;
};

LeviLocusCheck levi_locus_check(const LieAlgebra& g, const std::vector<int>& subset, const LieElement& x,
                                const LocusOptions& opts = {});

struct SimpleIdeal {
  char type;
  int rank;
};

/// Minimum over the simple ideals; the center contributes nothing.
int reductive_min(const std::vector<SimpleIdeal>& ideals, int center_dim, FactorCodimCache& cache);

/// Number of Weyl group orbits on the roots, by closing each root under reflections.
int weyl_orbit_count(const RootSystem& rs);

}  // namespace commvar
