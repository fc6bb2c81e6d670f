#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reflex/polytope.hpp"
#include "reflex/reflexive.hpp"

namespace reflex {

struct Star {
  std::vector<std::size_t> facets;   // facets containing x
  std::vector<IntVector> points;     // lattice points on those facets
};

/// Union of the facets containing x. Throws NotOnBoundary.
Star star(const Polytope& p, const IntVector& x);
/// Some facet contains y but not x.
bool is_away(const Polytope& p, const IntVector& y, const IntVector& x);
/// x + t (y - x) leaves P for every t > 1.
bool is_away_local(const Polytope& p, const IntVector& y, const IntVector& x);

/// Last point of P on the line x + t dir, or nothing if the line misses P.
std::optional<RationalPoint> line_exit(const Polytope& p, const RationalPoint& x,
                                       const IntVector& dir);

struct ProjectionResult {
  Polytope source;
  IntVector direction;
  QuotientProjection quotient;
  Polytope image;
  /// rho: each lattice point of the image to the top of its fibre in P.
  std::map<IntVector, RationalPoint, LexLess> lift_table;

  RationalPoint rho(const RationalPoint& y) const;
};

/// P_v in the coordinates of quotient_projection(v).
/// Throws NotOnBoundary, NotPrimitive.
ProjectionResult project(const Polytope& p, const IntVector& v);

struct ClaimResult {
  bool applies = true;
  bool ok = true;
  std::string witness;

  void fail_with(std::string w) {
    if (ok) witness = std::move(w);
    ok = false;
  }
};

struct ProjectionClaims {
  std::array<ClaimResult, 8> claims;
  bool image_reflexive = false;
  bool slice_is_lattice = false;

  bool all_pass() const;
  Report to_report() const;
};

/// Throws NotReflexive, NotOnBoundary.
ProjectionClaims verify_projection_claims(const Polytope& p, const IntVector& v);

/// Common value of |[v,w] ∩ M| - 1 over vertices w sharing a facet with v.
/// Throws NotVertex.
std::optional<Integer> f_condition(const Polytope& p, const IntVector& v);

/// Every ridge C of a facet F ∋ v with v ∉ C carries w_1..w_{d-1} with
/// w_i - v a basis of eta_F-perp. Throws NotReflexive, NotVertex.
bool z_basis_condition(const Polytope& p, const IntVector& v);

struct TermpropResult {
  bool semi_terminal = false;
  bool all_projections_fano = false;
  bool terminal = false;
  bool all_projections_canonical = false;
  std::string witness;

  bool holds() const {
    return semi_terminal == all_projections_fano && terminal == all_projections_canonical;
  }
  Report to_report() const;
};

/// Throws NotReflexive.
TermpropResult verify_termprop(const Polytope& p);

}  // namespace reflex
