#pragma once

// Named polytopes.

#include <string>
#include <vector>

#include "reflex/polytope.hpp"

namespace reflex {

/// conv(±[0,1]^d).
Polytope zonotope(std::size_t d);
/// [-1,1]^d.
Polytope cube(std::size_t d);
/// conv(±e_i).
Polytope cross(std::size_t d);
/// conv(e_1, ..., e_d, -(e_1 + ... + e_d)).
Polytope simplex(std::size_t d);
Polytope hexagon();
Polytope cell24();
/// conv(±(2,1,1,1), ±e_2, ±e_3, ±e_4).
Polytope wirth();
/// Product of k hexagons, dimension 2k.
Polytope hexagon_power(std::size_t k);

/// Labels of the sixteen reflexive polygons: 3, 4a, 4b, 4c, 5a, ..., 9.
const std::vector<std::string>& polygon_labels();
/// Pinned representative of a reflexive polygon class. Throws UnknownName.
Polytope polygon(const std::string& label);

/// Builds a polytope from a whitespace separated description such as
/// "zonotope 3", "polygon 8c" or "product cube 1 hexagon". "name:param"
/// is accepted for single-parameter names. Throws UnknownName.
Polytope gallery(const std::string& description);

}  // namespace reflex

namespace reflex {

/// Reflexive polytopes conv(P ∩ M minus v) reachable from P by repeatedly
/// dropping a vertex v, breadth first and up to isomorphism. P comes first.
std::vector<Polytope> reflexive_subpolytopes(const Polytope& p, std::size_t limit);

/// Deterministic set of pairwise non-isomorphic 3-dimensional reflexive
/// polytopes, grown round-robin from several maximal ones.
std::vector<Polytope> corpus_3d(std::size_t limit);

}  // namespace reflex
