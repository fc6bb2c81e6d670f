#pragma once

// Extreme rays of a pointed polyhedral cone {a : <c_i, a> >= 0} by the
// double description method with the combinatorial adjacency test.

#include <vector>

#include "reflex/lattice.hpp"

namespace reflex {

/// Rays are returned primitive and sorted lexicographically. The constraint
/// rows must span the whole space; otherwise the cone is not pointed and
/// NotFullDimensional is thrown.
std::vector<IntVector> extreme_rays(const std::vector<IntVector>& constraints);

/// Vertices of the bounded polytope {x : <normal_i, x> >= -level_i}.
/// The polytope must be full-dimensional.
std::vector<RationalPoint> vertices_of_inequalities(const std::vector<IntVector>& normals,
                                                    const std::vector<Integer>& levels);

}  // namespace reflex
