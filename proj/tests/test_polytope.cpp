#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reflex/error.hpp"
#include "reflex/gallery.hpp"
#include "reflex/io.hpp"
#include "reflex/polytope.hpp"
#include "reflex/reflexive.hpp"
#include "support.hpp"

using namespace reflex;
using testing::pts;
using testing::vec;

namespace {

std::vector<std::pair<std::string, Polytope>> gallery_list() {
  std::vector<std::pair<std::string, Polytope>> out;
  for (std::size_t d = 1; d <= 5; ++d) out.emplace_back("cube " + std::to_string(d), cube(d));
  for (std::size_t d = 2; d <= 5; ++d) {
    out.emplace_back("zonotope " + std::to_string(d), zonotope(d));
    out.emplace_back("cross " + std::to_string(d), cross(d));
  }
  for (std::size_t d = 2; d <= 4; ++d) out.emplace_back("simplex " + std::to_string(d), simplex(d));
  out.emplace_back("hexagon", hexagon());
  out.emplace_back("cell24", cell24());
  out.emplace_back("wirth", wirth());
  out.emplace_back("hexagon power 2", hexagon_power(2));
  for (const auto& l : polygon_labels()) out.emplace_back("polygon " + l, polygon(l));
  return out;
}

std::vector<testing::Halfspace> library_halfspaces(const Polytope& p) {
  std::vector<testing::Halfspace> out;
  for (const auto& f : p.facets()) out.push_back({f.normal, f.level});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("hull of small point sets") {
  SUBCASE("square with redundant points") {
    auto p = Polytope::hull(pts({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}, {0, 0}, {0, 1}}));
    CHECK(p.vertices().size() == 4);
    CHECK(p.facets().size() == 4);
    CHECK(p.lattice_points().size() == 9);
  }
  SUBCASE("flat input") {
    CHECK_THROWS_AS(Polytope::hull(pts({{0, 0}, {1, 1}, {2, 2}})), Error);
  }
  SUBCASE("vertices in graded lexicographic order") {
    auto p = hexagon();
    for (std::size_t i = 0; i + 1 < p.vertices().size(); ++i)
      CHECK(graded_lex_less(p.vertices()[i], p.vertices()[i + 1]));
  }
}

TEST_CASE("gallery vertex counts") {
  CHECK(product(cube(1), cube(1)).vertices().size() == 4);
  CHECK(zonotope(3).vertices().size() == 14);
  CHECK(cell24().vertices().size() == 24);
  CHECK(wirth().vertices().size() == 8);
  CHECK(wirth().facets().size() == 16);
  CHECK(hexagon_power(2).vertices().size() == 36);
  CHECK(reflexive_dual(hexagon_power(2)).vertices().size() == 12);
}

TEST_CASE("facets agree with the d-subset oracle") {
  for (const auto& [name, p] : gallery_list()) {
    if (p.dim() > 4 || p.vertices().size() > 36) continue;
    CAPTURE(name);
    CHECK(library_halfspaces(p) == testing::brute_force_facets(p.vertices()));
  }
}

TEST_CASE("facet correctness conditions") {
  for (const auto& [name, p] : gallery_list()) {
    CAPTURE(name);
    for (const auto& f : p.facets()) {
      std::size_t tight = 0;
      for (const auto& v : p.vertices()) {
        CHECK(f.slack(v) >= 0);
        if (f.slack(v) == 0) ++tight;
      }
      CHECK(tight >= p.dim());
      CHECK(tight == f.vertices.size());
      CHECK(is_primitive(f.normal));
      for (const auto& m : p.lattice_points()) CHECK(f.slack(m) >= 0);
    }
  }
}

TEST_CASE("lattice points agree with recursive slicing") {
  for (const auto& [name, p] : gallery_list()) {
    CAPTURE(name);
    auto hs = p.dim() <= 4 && p.vertices().size() <= 36 ? testing::brute_force_facets(p.vertices())
                                                        : library_halfspaces(p);
    CHECK(p.lattice_points().size() == testing::slice_points(p.vertices(), hs).size());
    auto sorted = p.lattice_points();
    std::sort(sorted.begin(), sorted.end(), LexLess{});
    CHECK(sorted == testing::box_scan(p.vertices(), hs));
  }
}

TEST_CASE("hull is idempotent and products multiply vertex counts") {
  auto list = gallery_list();
  for (const auto& [name, p] : list) {
    CAPTURE(name);
    CHECK(Polytope::hull(p.vertices()) == p);
  }
  for (std::size_t i = 0; i < list.size(); i += 7)
    for (std::size_t j = 0; j < list.size(); j += 9) {
      const auto& a = list[i].second;
      const auto& b = list[j].second;
      if (a.dim() + b.dim() > 5) continue;
      CHECK(product(a, b).vertices().size() == a.vertices().size() * b.vertices().size());
    }
}

TEST_CASE("queries") {
  auto p = cube(2);
  CHECK(p.contains(vec({1, 1})));
  CHECK(!p.contains(vec({2, 0})));
  CHECK(p.in_interior(vec({0, 0})));
  CHECK(p.on_boundary(vec({1, 0})));
  CHECK(p.facets_containing(vec({1, 1})).size() == 2);
  CHECK(p.boundary_lattice_points().size() == 8);
  CHECK(p.interior_lattice_points().size() == 1);
  CHECK(p.ridges().size() == 4);
  CHECK(p.is_centrally_symmetric());
  CHECK(p.is_simplicial());
  CHECK(!cube(3).is_simplicial());
  CHECK(simplex(3).is_simplex());
  CHECK(cross(3).is_simplicial());
  CHECK(p.max_step(RationalPoint(vec({0, 0})), vec({1, 0})) == 1);
  CHECK(p.minimal_face_dimension(pts({{1, 1}})) == 0);
  CHECK(p.minimal_face_dimension(pts({{1, 0}})) == 1);
  CHECK(is_empty_hull(pts({{0, 0}, {1, 0}, {0, 1}})));
  CHECK(!is_empty_hull(pts({{0, 0}, {2, 0}})));
  CHECK(hull_lattice_points(pts({{0, 0, 0}, {2, 2, 0}})).size() == 3);
}

TEST_CASE("transform and free sum") {
  IntMatrix m = IntMatrix::from_rows({{1, 1}, {0, 1}});
  auto t = transform(hexagon(), UnimodularMap(m));
  CHECK(t.vertices().size() == 6);
  CHECK(t.lattice_points().size() == 7);
  auto fs = free_sum(cross(1), cross(1));
  CHECK(fs == cross(2));
}

TEST_CASE("parsing") {
  SUBCASE("comments and blank lines") {
    auto p = parse_polytope("# triangle\n\n2 3\n1 0  # first\n0 1\n-1 -1\n");
    CHECK(p == simplex(2));
  }
  SUBCASE("errors carry a position") {
    try {
      parse_polytope("2 3\n1 0\n0 x\n-1 -1\n");
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Parse);
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
      CHECK(std::string(e.what()).find("column 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_polytope("2 3\n1 0\n0 1\n"), Error);
    CHECK_THROWS_AS(parse_polytope("2 2\n1 0 0\n0 1\n"), Error);
    CHECK_THROWS_AS(parse_polytope(""), Error);
  }
  SUBCASE("vector syntax") {
    CHECK(parse_vector("1,0,-2") == vec({1, 0, -2}));
    CHECK_THROWS_AS(parse_vector("1,,2"), Error);
    CHECK_THROWS_AS(parse_vector("a"), Error);
  }
}

TEST_CASE("format then parse reproduces the vertex set") {
  std::mt19937 rng(5);
  for (const auto& [name, p] : gallery_list()) {
    CAPTURE(name);
    auto q = parse_polytope(format_polytope(p));
    CHECK(q.vertices() == p.vertices());
    auto moved = transform(p, UnimodularMap(testing::random_unimodular(p.dim(), rng)));
    CHECK(parse_polytope(format_polytope(moved)).vertices() == moved.vertices());
  }
}
