#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reflex/error.hpp"
#include "reflex/gallery.hpp"
#include "reflex/polytope.hpp"
#include "reflex/reflexive.hpp"
#include "support.hpp"

using namespace reflex;
using testing::pts;
using testing::vec;

namespace {

std::vector<std::pair<std::string, Polytope>> fano_list() {
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
  // Fano but not reflexive.
  out.emplace_back("index 3 triangle", Polytope::hull(pts({{1, 0}, {0, 1}, {-1, -3}})));
  out.emplace_back("index 2 triangle", Polytope::hull(pts({{1, 0}, {-1, 2}, {-1, -2}})));
  out.emplace_back("lopsided", Polytope::hull(pts({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -3}})));
  out.emplace_back("long simplex", Polytope::hull(pts({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -2, -3}})));
  return out;
}

// Minimal positive value of -eta_F over lattice points of cone(F) other than
// 0 and the vertices of F, by scanning the box of 2P, minus one.
Integer index_oracle(const Polytope& p) {
  Integer k = 1;
  for (const auto& h : testing::brute_force_facets(p.vertices())) k = lcm(k, h.level);
  return k;
}

}  // namespace

TEST_CASE("predicate examples") {
  SUBCASE("hexagon") {
    auto r = check_predicates(hexagon());
    CHECK(r.reflexive);
    CHECK(r.smooth);
    CHECK(r.terminal);
    CHECK(*r.discrepancy == 1);
  }
  SUBCASE("square") {
    auto r = check_predicates(cube(2));
    CHECK(r.reflexive);
    CHECK(r.canonical);
    CHECK(!r.terminal);
    CHECK(*r.gorenstein_index == 1);
    CHECK(*r.discrepancy == 0);
    CHECK(r.to_report().get("index") == "1");
  }
  SUBCASE("wirth") {
    auto p = wirth();
    CHECK(is_reflexive(p));
    CHECK(is_terminal(p));
    CHECK(!is_smooth(p));
    CHECK(p.is_simplicial());
    CHECK(p.is_centrally_symmetric());
  }
  SUBCASE("cell24") {
    auto p = cell24();
    CHECK(is_reflexive(p));
    CHECK(is_terminal(p));
    CHECK(p.is_centrally_symmetric());
  }
  SUBCASE("non Fano inputs") {
    auto shifted = Polytope::hull(pts({{0, 0}, {1, 0}, {0, 1}}));
    auto r = check_predicates(shifted);
    CHECK(!r.fano);
    CHECK(!r.reflexive);
    CHECK(r.witnesses.count("fano") == 1);
    CHECK_THROWS_AS(dual(shifted), Error);
    CHECK_THROWS_AS(is_reflexive(Polytope::hull(pts({{2, 0}, {0, 1}, {-1, -1}}))), Error);
    CHECK_THROWS_AS(reflexive_dual(Polytope::hull(pts({{1, 0}, {0, 1}, {-1, -3}}))), Error);
  }
}

TEST_CASE("implication chain") {
  for (const auto& [name, p] : fano_list()) {
    CAPTURE(name);
    auto r = check_predicates(p);
    REQUIRE(r.fano);
    if (r.smooth) CHECK(r.terminal);
    if (r.terminal) CHECK(r.canonical);
    if (r.reflexive) CHECK(r.canonical);
    CHECK(r.reflexive == (*r.gorenstein_index == 1));
    if (r.terminal) CHECK(r.semi_terminal);
  }
}

TEST_CASE("gorenstein index against facet levels") {
  for (const auto& [name, p] : fano_list()) {
    if (p.dim() > 4 || p.vertices().size() > 36) continue;
    CAPTURE(name);
    CHECK(gorenstein_index(p) == index_oracle(p));
  }
  CHECK(gorenstein_index(Polytope::hull(pts({{1, 0}, {0, 1}, {-1, -3}}))) == 3);
}

TEST_CASE("discrepancy against the truncated-cone oracle") {
  CHECK(testing::discrepancy_oracle(hexagon()) == 1);
  CHECK(testing::discrepancy_oracle(cube(2)) == 0);
  for (const auto& [name, p] : fano_list()) {
    if (p.dim() > 4 || p.vertices().size() > 36) continue;
    CAPTURE(name);
    Rational a = discrepancy(p);
    CHECK(a == testing::discrepancy_oracle(p));
    CHECK(a > -1);
    CHECK(a <= 1);
    CHECK(is_terminal(p) == (a > 0));
    CHECK(is_canonical(p) == (a >= 0));
  }
}

TEST_CASE("duality") {
  for (const auto& [name, p] : fano_list()) {
    CAPTURE(name);
    auto dp = dual(p);
    CHECK(dp.vertices.size() == p.facets().size());
    CHECK(dp.is_lattice == is_reflexive(p));
    if (!dp.is_lattice) continue;
    const auto& q = *dp.polytope;
    CHECK(q.facets().size() == p.vertices().size());
    CHECK(reflexive_dual(q).vertices() == p.vertices());
  }
  SUBCASE("product duality") {
    std::vector<Polytope> small{cube(1), hexagon(), simplex(2), polygon("8c"), cross(2)};
    for (const auto& a : small)
      for (const auto& b : small)
        CHECK(reflexive_dual(product(a, b)) == free_sum(reflexive_dual(a), reflexive_dual(b)));
  }
  SUBCASE("rational dual") {
    auto dp = dual(Polytope::hull(pts({{1, 0}, {0, 1}, {-1, -3}})));
    CHECK(!dp.is_lattice);
    CHECK(!dp.polytope);
  }
}

TEST_CASE("facets sit at height one after a basis change") {
  for (const auto& [name, p] : fano_list()) {
    if (!is_reflexive(p) || p.dim() > 4) continue;
    CAPTURE(name);
    const std::size_t d = p.dim();
    for (std::size_t fi = 0; fi < p.facets().size(); ++fi) {
      const auto& eta = p.facets()[fi].normal;
      for (const auto& m : p.facet_lattice_points(fi)) {
        IntMatrix u = complete_to_basis(m).matrix();
        // Move the other columns into eta-perp.
        for (std::size_t c = 0; c + 1 < d; ++c) {
          Integer s = dot(eta, u.col(c));
          for (std::size_t r = 0; r < d; ++r) u(r, c) += s * m[r];
        }
        REQUIRE(abs(determinant(u)) == 1);
        IntMatrix inv = unimodular_inverse(u);
        for (auto vi : p.facets()[fi].vertices) CHECK((inv * p.vertices()[vi])[d - 1] == 1);
      }
    }
  }
}

TEST_CASE("embedding in the unit cube") {
  auto check_embedding = [](const Polytope& p) {
    auto u = embed_in_unit_cube(p);
    REQUIRE(u);
    for (const auto& v : p.vertices())
      for (const auto& c : u->apply(v)) CHECK(abs(c) <= 1);
  };
  check_embedding(hexagon());
  check_embedding(cube(3));
  check_embedding(cross(3));
  check_embedding(zonotope(3));
  for (const auto& p : corpus_3d(250))
    if (p.is_centrally_symmetric()) check_embedding(p);
  CHECK(!embed_in_unit_cube(polygon("9")));
}

TEST_CASE("reports") {
  auto r = check_predicates(hexagon()).to_report();
  CHECK(r.get("reflexive") == "true");
  CHECK(r.to_text().find("smooth=true") != std::string::npos);
  CHECK(r.to_json().find("\"reflexive\"") != std::string::npos);
}
