#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reflex/lattice.hpp"

namespace reflex {

/// Facet inequality <normal, x> >= -level with a primitive normal.
/// level >= 1 for every facet exactly when 0 is an interior point; then the
/// dual vertex eta_F equals normal / level.
struct Facet {
  IntVector normal;
  Integer level;
  std::vector<std::size_t> vertices;  // indices into Polytope::vertices()

  Integer slack(const IntVector& x) const { return dot(normal, x) + level; }
  bool contains(const IntVector& x) const { return slack(x) == 0; }
  RationalPoint eta() const { return RationalPoint(normal, level); }
};

struct Ridge {
  std::size_t first;
  std::size_t second;
  std::vector<std::size_t> vertices;
};

/// Full-dimensional lattice polytope, immutable. Copies share cached data.
class Polytope {
 public:
  /// Convex hull of the points. Throws NotFullDimensional.
  static Polytope hull(const std::vector<IntVector>& points);

  std::size_t dim() const;
  /// Irredundant vertices in graded lexicographic order.
  const std::vector<IntVector>& vertices() const;
  const std::vector<Facet>& facets() const;
  /// Facet indices incident to vertex i.
  const std::vector<std::size_t>& vertex_facets(std::size_t i) const;

  std::optional<std::size_t> vertex_index(const IntVector& x) const;
  bool is_vertex(const IntVector& x) const { return vertex_index(x).has_value(); }

  bool contains(const IntVector& x) const;
  bool contains(const RationalPoint& x) const;
  bool in_interior(const IntVector& x) const;
  bool on_boundary(const IntVector& x) const { return contains(x) && !in_interior(x); }
  std::vector<std::size_t> facets_containing(const IntVector& x) const;
  std::vector<std::size_t> facets_containing(const RationalPoint& x) const;

  /// All lattice points, sorted graded-lexicographically. Cached.
  const std::vector<IntVector>& lattice_points() const;
  std::vector<IntVector> interior_lattice_points() const;
  std::vector<IntVector> boundary_lattice_points() const;
  /// Lattice points lying on facet f.
  std::vector<IntVector> facet_lattice_points(std::size_t f) const;

  /// Pairs of facets meeting in a (d-2)-dimensional face. Cached.
  const std::vector<Ridge>& ridges() const;
  /// Vertex indices common to all the given facets.
  std::vector<std::size_t> common_vertices(const std::vector<std::size_t>& facets) const;
  /// Dimension of the smallest face containing all the points (which must
  /// lie in P); d when some point is interior.
  long minimal_face_dimension(const std::vector<IntVector>& points) const;

  bool origin_in_interior() const;
  bool is_simplicial() const;
  bool is_simplex() const;
  bool is_empty_polytope() const;
  bool is_centrally_symmetric() const;

  /// Largest t with x + t * dir in P, for x in P and dir != 0.
  Rational max_step(const RationalPoint& x, const IntVector& dir) const;

  std::vector<IntVector> facet_vertex_points(std::size_t f) const;
  std::string to_string() const;

  friend bool operator==(const Polytope& a, const Polytope& b);

 private:
  struct Impl;
  explicit Polytope(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Cartesian product P1 x P2 in the direct-sum lattice.
Polytope product(const Polytope& p1, const Polytope& p2);
/// conv(P1 x {0}, {0} x P2); the dual of a product of duals.
Polytope free_sum(const Polytope& p1, const Polytope& p2);
/// Image of P under a unimodular map.
Polytope transform(const Polytope& p, const UnimodularMap& u);

}  // namespace reflex

namespace reflex {

/// Lattice points of conv(points) for a point set of any dimension,
/// computed in coordinates of the saturated affine lattice.
std::vector<IntVector> hull_lattice_points(const std::vector<IntVector>& points);
/// True when the only lattice points of conv(points) are its vertices.
bool is_empty_hull(const std::vector<IntVector>& points);

/// Vertices of the convex hull of full-dimensional rational points, sorted.
std::vector<RationalPoint> rational_hull_vertices(const std::vector<RationalPoint>& points);

}  // namespace reflex
