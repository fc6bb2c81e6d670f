#pragma once

// Isomorphism classes of reflexive polygons by growth from small canonical
// polygons inside [-3,3]^2.

#include <filesystem>
#include <string>
#include <vector>

#include "reflex/normal_form.hpp"
#include "reflex/polytope.hpp"

namespace reflex {

struct PolygonClass {
  std::size_t id = 0;
  std::string label;
  NormalForm form;
  Polytope polytope;
  std::size_t vertices = 0;
  std::size_t boundary_points = 0;
  std::size_t dual_boundary_points = 0;
  std::size_t max_edge_points = 0;
  std::size_t dual_id = 0;
  bool reflexive = false;
  bool self_dual = false;
  bool smooth = false;
  bool centrally_symmetric = false;
};

struct ClassificationResult {
  std::vector<PolygonClass> classes;  // sorted by label
  std::size_t seed_polygons = 0;  // canonical triangles and quadrilaterals in the box
  std::size_t canonical_seen = 0;
  bool closed_under_duality = false;

  const PolygonClass* find(const std::string& label) const;
  /// One row per class: id label vertices boundary dual flags.
  std::string summary_table() const;
  /// Writes d2_<label>.poly for every class and summary.txt.
  void write(const std::filesystem::path& dir) const;
};

ClassificationResult classify_reflexive_2d();

/// Facts that hold for every reflexive polygon class, checked on a result.
struct PolygonFacts {
  bool sixteen = false;
  bool boundary_multiset = false;
  bool five_smooth = false;
  bool all_reflexive = false;
  bool twelve = false;             // |dP cap M| + |dP* cap N| = 12
  bool max_vertices = false;       // at most 6, only 6a attains it
  bool max_edge_points = false;    // at most 5, only 8c attains it
  bool labels_match_gallery = false;
  std::string witness;

  bool all_pass() const {
    return sixteen && boundary_multiset && five_smooth && all_reflexive && twelve && max_vertices &&
           max_edge_points && labels_match_gallery;
  }
};

PolygonFacts check_polygon_facts(const ClassificationResult& r);

}  // namespace reflex
