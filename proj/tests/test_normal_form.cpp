#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reflex/error.hpp"
#include "reflex/gallery.hpp"
#include "reflex/normal_form.hpp"
#include "reflex/reflexive.hpp"
#include "support.hpp"

using namespace reflex;
using testing::pts;

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
  return out;
}

Polytope moved(const Polytope& p, std::mt19937& rng) {
  return transform(p, UnimodularMap(testing::random_unimodular(p.dim(), rng)));
}

}  // namespace

TEST_CASE("normal form is invariant under unimodular maps") {
  std::mt19937 rng(99);
  for (const auto& [name, p] : gallery_list()) {
    CAPTURE(name);
    const NormalForm nf = normal_form(p);
    CHECK(nf.matrix.rows() == p.dim());
    CHECK(nf.matrix.cols() == p.vertices().size());
    for (int t = 0; t < 500; ++t) CHECK(normal_form(moved(p, rng)) == nf);
  }
}

TEST_CASE("normal form of the polygons") {
  std::mt19937 rng(4);
  std::vector<NormalForm> forms;
  for (const auto& l : polygon_labels()) {
    auto p = polygon(l);
    forms.push_back(normal_form(p));
    for (int t = 0; t < 500; ++t) CHECK(normal_form(moved(p, rng)) == forms.back());
  }
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j) CHECK(!(forms[i] == forms[j]));
}

TEST_CASE("isomorphic agrees with the brute-force oracle") {
  std::mt19937 rng(17);
  std::vector<std::pair<std::string, Polytope>> items;
  for (const auto& l : polygon_labels()) {
    items.emplace_back(l, polygon(l));
    items.emplace_back(l + "'", moved(polygon(l), rng));
  }
  items.emplace_back("hexagon", hexagon());
  items.emplace_back("zonotope 2", zonotope(2));
  items.emplace_back("cube 3", cube(3));
  items.emplace_back("cross 3", cross(3));
  items.emplace_back("zonotope 3", zonotope(3));
  items.emplace_back("dual zonotope 3", reflexive_dual(zonotope(3)));
  items.emplace_back("cube 3'", moved(cube(3), rng));
  items.emplace_back("simplex 3", simplex(3));
  items.emplace_back("other simplex", Polytope::hull(pts({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -2}})));
  for (const auto& [a, p] : items)
    for (const auto& [b, q] : items) {
      if (p.dim() != q.dim()) continue;
      CAPTURE(a);
      CAPTURE(b);
      CHECK(isomorphic(p, q) == testing::brute_force_isomorphic(p, q));
    }
  CHECK_THROWS_AS(isomorphic(hexagon(), cube(3)), Error);
}

TEST_CASE("machine-word and exact paths agree") {
  std::mt19937 rng(23);
  for (const auto& [name, p] : gallery_list()) {
    if (p.vertices().size() > 36) continue;
    CAPTURE(name);
    CHECK(exact_normal_form(p) == normal_form(p));
    auto q = moved(p, rng);
    CHECK(exact_normal_form(q) == normal_form(p));
  }
  // Coordinates too large for the machine-word path.
  IntMatrix big = IntMatrix::from_rows({{1, 0}, {0, 1}});
  for (int k = 0; k < 40; ++k) {
    big = IntMatrix::from_rows({{1, 1}, {0, 1}}) * big;
    big = IntMatrix::from_rows({{1, 0}, {1, 1}}) * big;
  }
  auto far = transform(hexagon(), UnimodularMap(big));
  CHECK(normal_form(far) == normal_form(hexagon()));
}

TEST_CASE("normal form polytope") {
  for (const auto& [name, p] : gallery_list()) {
    CAPTURE(name);
    auto q = normal_form(p).polytope();
    CHECK(q.vertices().size() == p.vertices().size());
    CHECK(normal_form(q) == normal_form(p));
  }
  CHECK(!normal_form(hexagon()).to_string().empty());
  CHECK(isomorphic(cell24(), reflexive_dual(cell24())));
}
