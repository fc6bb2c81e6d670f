#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reflex/error.hpp"
#include "reflex/gallery.hpp"
#include "reflex/projection.hpp"
#include "reflex/reflexive.hpp"
#include "support.hpp"

using namespace reflex;
using testing::pts;
using testing::vec;

namespace {

std::vector<std::pair<std::string, Polytope>> reflexive_list() {
  std::vector<std::pair<std::string, Polytope>> out;
  for (std::size_t d = 2; d <= 4; ++d) {
    out.emplace_back("cube " + std::to_string(d), cube(d));
    out.emplace_back("zonotope " + std::to_string(d), zonotope(d));
    out.emplace_back("cross " + std::to_string(d), cross(d));
    out.emplace_back("simplex " + std::to_string(d), simplex(d));
  }
  out.emplace_back("hexagon", hexagon());
  out.emplace_back("cell24", cell24());
  out.emplace_back("wirth", wirth());
  for (const auto& l : polygon_labels()) out.emplace_back("polygon " + l, polygon(l));
  return out;
}

std::vector<IntVector> sorted(std::vector<IntVector> v) {
  std::sort(v.begin(), v.end(), LexLess{});
  return v;
}

}  // namespace

TEST_CASE("star") {
  auto s = star(hexagon(), vec({1, 0}));
  CHECK(s.facets.size() == 2);
  CHECK(sorted(s.points) == sorted(pts({{1, 1}, {1, 0}, {0, -1}})));
  CHECK(star(cube(2), vec({1, 1})).facets.size() == 2);
  CHECK(star(simplex(2), vec({1, 0})).facets.size() == 2);
  CHECK_THROWS_AS(star(hexagon(), vec({0, 0})), Error);
}

TEST_CASE("away relation") {
  CHECK(is_away(hexagon(), vec({0, 1}), vec({1, 0})));
  CHECK(is_away(hexagon(), vec({1, 1}), vec({1, 0})));
  CHECK(!is_away(cube(2), vec({1, 0}), vec({1, 1})));
  for (const auto& [name, p] : reflexive_list()) {
    if (p.dim() > 3) continue;
    CAPTURE(name);
    auto b = p.boundary_lattice_points();
    for (const auto& x : b)
      for (const auto& y : b)
        if (x != y) CHECK(is_away(p, y, x) == is_away_local(p, y, x));
  }
}

TEST_CASE("projection examples") {
  SUBCASE("wirth along e4") {
    auto r = project(wirth(), vec({0, 0, 0, 1}));
    CHECK(r.image.dim() == 3);
    CHECK(r.image.vertices().size() == 6);
    auto pr = check_predicates(r.image);
    CHECK(pr.fano);
    CHECK(pr.terminal);
    CHECK(!pr.reflexive);
    auto claims = verify_projection_claims(wirth(), vec({0, 0, 0, 1}));
    for (std::size_t i = 0; i < 7; ++i) CHECK(claims.claims[i].ok);
    CHECK(!claims.slice_is_lattice);
    CHECK(!claims.image_reflexive);
    CHECK(claims.all_pass());
    CHECK(f_condition(wirth(), vec({0, 0, 0, 1})) == Integer(1));
    CHECK(!z_basis_condition(wirth(), vec({0, 0, 0, 1})));
  }
  SUBCASE("hexagon along (1,1)") {
    auto r = project(hexagon(), vec({1, 1}));
    CHECK(r.image.dim() == 1);
    CHECK(r.image.lattice_points().size() == 3);
    for (const auto& v : r.image.vertices()) CHECK(abs(v[0]) == 1);
    IntVector y = r.quotient.project(vec({1, 0}));
    CHECK(r.rho(RationalPoint(y)) == RationalPoint(vec({1, 0})));
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(project(hexagon(), vec({0, 0})), Error);
    CHECK_THROWS_AS(project(cube(2), vec({2, 0})), Error);
    CHECK_THROWS_AS(verify_projection_claims(Polytope::hull(pts({{1, 0}, {0, 1}, {-1, -3}})), vec({1, 0})),
                    Error);
  }
}

TEST_CASE("f and z conditions") {
  CHECK(f_condition(cube(2), vec({1, 1})) == Integer(2));
  const auto hex = hexagon();
  for (const auto& v : hex.vertices()) {
    CHECK(f_condition(hex, v) == Integer(1));
    CHECK(z_basis_condition(hex, v));
  }
  CHECK_THROWS_AS(f_condition(hexagon(), vec({0, 0})), Error);
  for (const auto& [name, p] : reflexive_list()) {
    if (!is_smooth(p)) continue;
    CAPTURE(name);
    for (const auto& v : p.vertices()) CHECK(z_basis_condition(p, v));
  }
}

TEST_CASE("projection claims on every boundary point") {
  for (const auto& [name, p] : reflexive_list()) {
    CAPTURE(name);
    for (const auto& v : p.boundary_lattice_points()) {
      CAPTURE(format_vector(v));
      auto claims = verify_projection_claims(p, v);
      CHECK(claims.all_pass());
      auto r = project(p, v);
      // Bijections of lattice points and of links.
      CHECK(star(p, v).points.size() == r.image.lattice_points().size());
      for (const auto& m : r.image.lattice_points()) {
        auto lifted = r.rho(RationalPoint(m));
        REQUIRE(lifted.is_integral());
        CHECK(r.quotient.project(lifted.num) == m);
        CHECK(!p.facets_containing(lifted.num).empty());
      }
      CHECK(claims.image_reflexive == claims.slice_is_lattice);
    }
  }
}

TEST_CASE("smooth polytopes project to reflexive polytopes") {
  for (const auto& [name, p] : reflexive_list()) {
    if (!is_smooth(p)) continue;
    CAPTURE(name);
    for (const auto& v : p.vertices()) CHECK(is_reflexive(project(p, v).image));
  }
}

TEST_CASE("terminality through projections") {
  auto hex = verify_termprop(hexagon());
  CHECK(hex.holds());
  CHECK(hex.terminal);
  CHECK(hex.all_projections_canonical);
  auto w = verify_termprop(wirth());
  CHECK(w.holds());
  CHECK(w.terminal);
  CHECK(w.all_projections_canonical);
  auto sq = verify_termprop(cube(2));
  CHECK(sq.holds());
  CHECK(!sq.terminal);
  CHECK(!sq.all_projections_canonical);
  for (const auto& [name, p] : reflexive_list()) {
    CAPTURE(name);
    CHECK(verify_termprop(p).holds());
  }
}
