#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reflex/polytope.hpp"
#include "reflex/reflexive.hpp"

namespace reflex {

enum class PairClass { Sim, Antipodal, Sum };
const char* to_string(PairClass c);

/// The three conditions evaluated independently.
struct PairConditions {
  bool sim = false;        // common facet
  bool antipodal = false;  // v + w = 0
  bool sum = false;        // v + w on the boundary
  int count() const { return int(sim) + int(antipodal) + int(sum); }
};

/// Throws NotReflexive, NotBoundary.
PairConditions pair_conditions(const Polytope& p, const IntVector& v, const IntVector& w);
PairClass classify_pair(const Polytope& p, const IntVector& v, const IntVector& w);

struct PrimitiveRelation {
  IntVector v, w, z;
  Integer a, b;  // z = a v + b w
};

/// Marches v + w, v + 2w, ... (or the symmetric sequence) inside a facet
/// through v + w until the point shares a facet with both v and w.
/// Throws WrongClass unless the pair is of Sum type.
PrimitiveRelation primitive_relation(const Polytope& p, const IntVector& v, const IntVector& w);

/// All (a, b) in [1, bound]^2 with a v + b w on the boundary and sharing a
/// facet with v and with w.
std::vector<std::pair<long, long>> admissible_coefficients(const Polytope& p, const IntVector& v,
                                                           const IntVector& w, long bound);

struct PrimCheck {
  PrimitiveRelation relation;
  bool basis = false;   // v, w a basis of lin(v, w) ∩ M
  bool unique = false;  // exactly one admissible (a, b)
  bool i = false;
  bool ii = false;
  bool iii = false;
  bool iv = false;
  bool iv_applies = false;
  std::string witness;

  bool all_pass() const { return basis && unique && i && ii && iii && iv; }
  Report to_report() const;
};

/// Throws WrongClass.
PrimCheck verify_prim_properties(const Polytope& p, const IntVector& v, const IntVector& w);

/// Graph on boundary lattice points (or vertices) joined when they share a facet.
class BoundaryGraph {
 public:
  BoundaryGraph(const Polytope& p, bool vertices_only);

  const std::vector<IntVector>& nodes() const { return nodes_; }
  const std::vector<std::vector<std::size_t>>& adjacency() const { return adj_; }
  /// -1 when disconnected.
  long distance(std::size_t i, std::size_t j) const { return dist_[i][j]; }
  long diameter() const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_at_distance(long k) const;
  /// One line per node: "point: neighbour, neighbour".
  std::string to_text() const;

 private:
  std::vector<IntVector> nodes_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::vector<long>> dist_;
};

/// Throws NotReflexive.
BoundaryGraph boundary_graph(const Polytope& p, bool vertices_only);

/// Vertices of P outside st(v). Throws NotSimplicial, NotVertex.
std::size_t non_star_vertex_count(const Polytope& p, const IntVector& v);

/// Every pair of facets is parallel, shares a vertex, or both meet a third
/// facet. Returns a failing pair of facet indices, if any. Throws NotReflexive.
std::optional<std::pair<std::size_t, std::size_t>> facet_pair_violation(const Polytope& p);

}  // namespace reflex
