#pragma once

// Canonical representative of the lattice-isomorphism class of a polytope.
//
// For every ordered basis B taken from the vertices of a distinguished facet
// orbit, the vertex matrix is brought to Hermite normal form with the columns
// of B first and the remaining columns sorted. Heads are compared column by
// column; among the bases with the least head the least full matrix is the
// normal form.

#include <string>

#include "reflex/polytope.hpp"

namespace reflex {

struct NormalForm {
  IntMatrix matrix;  // d x |V(P)|

  friend bool operator==(const NormalForm& a, const NormalForm& b) { return a.matrix == b.matrix; }
  friend bool operator<(const NormalForm& a, const NormalForm& b) { return a.matrix < b.matrix; }
  std::string to_string() const;
  /// Polytope whose vertices are the columns.
  Polytope polytope() const;
};

NormalForm normal_form(const Polytope& p);
/// Same result as normal_form, always in arbitrary precision.
NormalForm exact_normal_form(const Polytope& p);
/// Throws DimensionMismatch.
bool isomorphic(const Polytope& p, const Polytope& q);

}  // namespace reflex
