#pragma once

// Root systems of simple type, stored in the basis of simple roots.
//
// Simple roots follow Bourbaki's numbering. The invariant form is scaled so
// that every squared length is an even integer: 2 for the short (or only)
// roots, 4 or 6 for the long roots of doubly or triply laced types.

#include <map>
#include <string>
#include <vector>

namespace commvar {

using RootVec = std::vector<int>;

/// An irreducible component of a simple subsystem, with its simple roots
/// listed in the standard order of that type.
struct SimpleFactor {
  char type = 'A';
  int rank = 0;
  std::vector<int> nodes;  // indices into the parent's simple roots

  [[nodiscard]] std::string label() const { return std::string(1, type) + std::to_string(rank); }
};

/// Canonical label of a list of factors, e.g. "A1+A2".
std::string factor_signature(const std::vector<SimpleFactor>& factors);

/// Subsystem spanned by a subset of the simple roots.
struct Subsystem {
  std::vector<int> subset;
  std::vector<int> roots;     // indices into RootSystem::roots()
  std::vector<int> positive;  // the positive ones
  std::vector<SimpleFactor> factors;
};

class RootSystem {
 public:
  /// Throws InvalidArgument if (type, rank) is not a simple type.
  RootSystem(char type, int rank);

  [[nodiscard]] char type() const { return type_; }
  [[nodiscard]] int rank() const { return rank_; }
  /// "B2" also for a system requested as C2.
  [[nodiscard]] std::string label() const { return std::string(1, type_) + std::to_string(rank_); }
  [[nodiscard]] const std::string& requested_label() const { return requested_; }

  [[nodiscard]] int lacety() const { return lacety_; }

  /// a_ij = <alpha_j, alpha_i^vee>, so alpha_j(H_i) = a_ij.
  [[nodiscard]] const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  [[nodiscard]] const std::vector<std::vector<int>>& form() const { return form_; }

  /// Positive roots ordered by height then lexicographically, followed by their
  /// negatives in the same order.
  [[nodiscard]] const std::vector<RootVec>& roots() const { return roots_; }
  [[nodiscard]] int num_positive() const { return static_cast<int>(roots_.size() / 2); }
  [[nodiscard]] int num_roots() const { return static_cast<int>(roots_.size()); }

  /// Index of a root, or -1 if v is not a root.
  [[nodiscard]] int index_of(const RootVec& v) const;
  [[nodiscard]] int negative_of(int idx) const;
  [[nodiscard]] bool is_positive(int idx) const { return idx < num_positive(); }
  [[nodiscard]] int simple_index(int i) const;  // index of alpha_i in roots()

  [[nodiscard]] int inner(const RootVec& a, const RootVec& b) const;
  /// <beta, alpha_i^vee>
  [[nodiscard]] int pairing(const RootVec& beta, int i) const;
  [[nodiscard]] int height(int idx) const;

  /// Coordinates of the coroot of a root in the basis of simple coroots.
  [[nodiscard]] std::vector<int> coroot(int idx) const;

  /// Number of distinct squared lengths, i.e. of Weyl group orbits on the roots.
  [[nodiscard]] int root_length_classes() const;

  /// Roots supported on `subset`, with their decomposition into simple factors.
  [[nodiscard]] Subsystem subsystem(const std::vector<int>& subset) const;

  /// Classification of the Dynkin subdiagram on `subset`.
  [[nodiscard]] std::vector<SimpleFactor> classify(const std::vector<int>& subset) const;

 private:
  char type_;
  int rank_;
  std::string requested_;
  int lacety_ = 1;
  std::vector<int> sqlen_;
  std::vector<std::vector<int>> form_;
  std::vector<std::vector<int>> cartan_;
  std::vector<RootVec> roots_;
  std::map<RootVec, int> index_;
};

/// Checks (type, rank) and returns "" when valid, otherwise the violated constraint.
std::string validate_type(char type, int rank);

}  // namespace commvar
