#pragma once

// Vertex and lattice point bounds with their proof mechanisms, and the
// facet characterization of terminal reflexive 3-polytopes.

#include <optional>
#include <string>
#include <vector>

#include "reflex/polytope.hpp"
#include "reflex/reflexive.hpp"

namespace reflex {

struct VertexBounds {
  std::size_t dim = 0;
  std::size_t vertices = 0;
  std::size_t alpha = 0;  // most vertices on a facet
  std::size_t beta = 0;   // most facets of a facet
  Integer coarse;         // 2 d alpha
  std::optional<Integer> large_alpha;  // alpha >= 2d - 3
  std::optional<Integer> small_alpha;  // alpha <= 2d - 3
  std::optional<Integer> simplicial;   // d^2 + 1 for simplicial P, d >= 3
  Integer second;                      // floor of the square-root bound

  bool all_pass() const;
  Report to_report() const;
};

/// Throws NotReflexive.
VertexBounds vertex_bounds(const Polytope& p);

struct FundCheck {
  std::size_t facet = 0;
  bool simplex = false;
  bool covered = false;      // every m with <eta_F, m> = 0 lies on a neighbouring facet
  bool normals = false;      // eta_{F_i} = u + alpha_i e_i*
  bool part1 = false;
  bool part2 = false;
  bool part3_applies = false;
  bool part3 = false;
  std::string witness;

  bool all_pass() const { return covered && normals && part1 && part2 && part3; }
  Report to_report() const;
};

/// Throws NotReflexive, NotSimplexFacet.
FundCheck lemma_fund_check(const Polytope& p, std::size_t facet);
/// Boundary lattice point m with <eta_F, m> = 0 on no facet meeting F in a
/// ridge. Works for any facet. Throws NotReflexive.
std::optional<IntVector> fund_coverage_violation(const Polytope& p, std::size_t facet);

struct ModKReport {
  unsigned k = 0;
  std::size_t size = 0;
  std::vector<std::vector<IntVector>> fibers;  // nonempty fibres, by residue
  bool injective = false;
  bool hypothesis = false;  // every segment between neighbours in B has 2 lattice points
  bool asserted = false;    // k = 2, hypothesis holds and P is canonical
  std::size_t symmetric_pairs = 0;
  bool zero_fiber_empty = false;
  bool fibers_ok = false;  // size <= 2, pairs centrally symmetric
  bool size_bound = false;
  bool pair_bound = false;
  std::string witness;

  bool all_pass() const { return !asserted || (zero_fiber_empty && fibers_ok && size_bound && pair_bound); }
  Report to_report() const;
};

/// Fibres of x -> x mod k on B. B must be a nonempty subset of the boundary.
ModKReport mod_k_analysis(const Polytope& p, unsigned k, const std::vector<IntVector>& b);

struct CentralReport {
  std::size_t points = 0;
  Integer bound;  // 3^d
  bool injective = false;
  std::size_t max_facet_points = 0;
  Integer facet_bound;  // 3^(d-1)
  bool equality = false;
  bool all_facets_full = false;
  bool is_cube = false;
  bool reflexive = false;

  bool all_pass() const;
  Report to_report() const;
};

/// Throws NotCentrallySymmetric, NotCanonical.
CentralReport central_bound_check(const Polytope& p);

/// Every facet is a unimodular triangle or a unimodular parallelogram.
/// Throws WrongDimension, NotReflexive.
bool facet_characterization_3d(const Polytope& p);

struct ConjectureReport {
  std::size_t dim = 0;
  std::size_t vertices = 0;
  bool vertconj = false;  // |V|^2 <= 6^d
  bool vertconj_equality = false;
  std::optional<bool> vertconj_type;  // P = hexagon^(d/2)
  bool simplicial = false;
  std::optional<std::size_t> mainconj_bound;
  std::optional<bool> mainconj;
  std::optional<bool> mainconj_equality;
  std::optional<bool> mainconj_type;  // P* = hexagon^(d/2)

  Report to_report() const;
};

/// Throws NotReflexive.
ConjectureReport conjecture_check(const Polytope& p);

struct SymmetricSimplicialReport {
  std::size_t dim = 0;
  std::size_t vertices = 0;
  bool hypothesis = false;  // some dual vertex u with -u in P*
  bool centrally_symmetric = false;
  std::size_t bound = 0;
  bool bound_ok = false;
  bool equality = false;
  std::optional<bool> type;  // equality type recognised
  std::string type_name;

  bool all_pass() const { return !hypothesis || (bound_ok && type.value_or(true)); }
  Report to_report() const;
};

/// Throws NotSimplicial, NotReflexive.
SymmetricSimplicialReport symmetric_simplicial_check(const Polytope& p);

}  // namespace reflex
