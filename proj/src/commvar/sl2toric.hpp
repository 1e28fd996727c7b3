#pragma once

// The commuting variety of sl_2: its quadratic ideal, the Jacobian rank along
// the variety, and normality through saturation of the torus-orbit semigroup.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "commvar/chevalley.hpp"

namespace commvar {

/// (x1, x2, x3, y1, y2, y3) with x = x1 e + x2 f + x3 h and y likewise.
using Sl2Point = std::array<Rational, 6>;

struct QuadraticTerm {
  int coeff;
  int a;  // variable indices into Sl2Point
  int b;
};

struct Polynomial {
  std::string text;
  std::vector<QuadraticTerm> terms;

  [[nodiscard]] Rational operator()(const Sl2Point& p) const;
  /// Gradient at p.
  [[nodiscard]] std::array<Rational, 6> gradient(const Sl2Point& p) const;
};

/// x2 y3 - x3 y2, x1 y2 - x2 y1, x1 y3 - x3 y1.
std::array<Polynomial, 3> ideal_generators();

/// Coordinates of [x, y] in the basis (e, f, h), computed in the Chevalley
/// basis of A1 with e = X_a, f = -X_-a, h = H_1.
std::array<Rational, 3> sl2_bracket_coordinates(const Sl2Point& p);

int jacobian_rank(const Sl2Point& p);

/// Nonzero point of C: a commuting pair (x, l x) moved by exp(ad n).
Sl2Point random_point_on_c(std::mt19937_64& rng);

struct AffineSemigroup {
  int lattice_rank = 0;
  std::vector<std::vector<Integer>> generators;
};

/// Images of the standard basis of Z^6 in Z^6 / R, R spanned by
/// (1,-1,0,-1,1,0) and (1,0,-1,-1,0,1), in coordinates of the free quotient.
AffineSemigroup torus_semigroup();

/// The relation lattice used by torus_semigroup.
IntMatrix torus_relations();

/// Images of arbitrary vectors of Z^6 in the quotient coordinates.
std::vector<std::vector<Integer>> quotient_images(const std::vector<std::vector<Integer>>& vectors);

/// True iff group(S) intersected with cone(S) equals S. Every lattice point of
/// the cone is a sum of generators plus a point of the half-open parallelepiped
/// of some linearly independent subset of generators, so it suffices to test
/// those finitely many points for membership. Membership is decided by a
/// bounded search over coefficients, bounded through a functional that is
/// positive on every generator.
bool is_saturated(const AffineSemigroup& s);

/// True iff v is a non-negative integer combination of the generators.
bool semigroup_contains(const AffineSemigroup& s, const std::vector<Integer>& v);

}  // namespace commvar
