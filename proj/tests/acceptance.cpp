// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "reflex/bounds.hpp"
#include "reflex/classify.hpp"
#include "reflex/gallery.hpp"
#include "reflex/normal_form.hpp"
#include "reflex/projection.hpp"
#include "reflex/reflexive.hpp"
#include "reflex/relations.hpp"
#include "support.hpp"

using namespace reflex;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) note << "first failure: " << what << "; ";
    pass = pass && cond;
  }
};

const std::vector<Polytope>& corpus() {
  static const std::vector<Polytope> c = corpus_3d(250);
  return c;
}

const ClassificationResult& classes() {
  static const ClassificationResult r = classify_reflexive_2d();
  return r;
}

std::vector<Polytope> polygons() {
  std::vector<Polytope> out;
  for (const auto& l : polygon_labels()) out.push_back(polygon(l));
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void classification(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  const auto& r = classes();
  double t = seconds_since(t0);
  std::vector<std::size_t> boundary;
  std::size_t smooth = 0;
  for (const auto& c : r.classes) {
    boundary.push_back(c.boundary_points);
    smooth += c.smooth;
  }
  std::sort(boundary.begin(), boundary.end());
  o.require(t < 300, "runtime");
  o.require(r.classes.size() == 16, "class count");
  o.require(boundary == std::vector<std::size_t>{3, 4, 4, 4, 5, 5, 6, 6, 6, 6, 7, 7, 8, 8, 8, 9}, "boundary multiset");
  o.require(smooth == 5, "smooth count");
  o.require(r.closed_under_duality, "duality closure");
  for (const auto& c : r.classes)
    o.require(normal_form(reflexive_dual(c.polytope)) == r.classes[c.dual_id].form, "dual class of " + c.label);
  o.note << r.classes.size() << " classes, " << smooth << " smooth, " << t << " s";
}

void twelve(Outcome& o) {
  for (const auto& c : classes().classes) {
    std::size_t own = c.polytope.boundary_lattice_points().size();
    std::size_t dual = reflexive_dual(c.polytope).boundary_lattice_points().size();
    o.require(own + dual == 12, "class " + c.label);
  }
  o.note << "16 classes checked";
}

void wirth_example(Outcome& o) {
  auto p = wirth();
  o.require(p.vertices().size() == 8, "vertex count");
  o.require(p.facets().size() == 16, "facet count");
  o.require(p.is_simplicial(), "simplicial");
  o.require(p.is_centrally_symmetric(), "central symmetry");
  o.require(is_terminal(p), "terminal");
  o.require(is_reflexive(p), "reflexive");
  o.require(!is_smooth(p), "not smooth");
  auto e4 = IntVector{0, 0, 0, 1};
  auto proj = project(p, e4);
  o.require(proj.image.vertices().size() == 6, "image vertices");
  o.require(is_fano(proj.image) && is_terminal(proj.image), "image terminal Fano");
  o.require(!is_reflexive(proj.image), "image not reflexive");
  auto claims = verify_projection_claims(p, e4);
  o.require(!claims.slice_is_lattice, "dual slice not a lattice polytope");
  o.require(claims.all_pass(), "projection claims");
  o.note << "8 vertices, 16 facets, image has " << proj.image.vertices().size() << " vertices";
}

void cell24_example(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  auto p = cell24();
  o.require(p.vertices().size() == 24, "vertex count");
  o.require(is_reflexive(p), "reflexive");
  o.require(is_terminal(p), "terminal");
  o.require(p.is_centrally_symmetric(), "central symmetry");
  o.require(isomorphic(p, reflexive_dual(p)), "self-dual");
  double t = seconds_since(t0);
  o.require(t < 30, "runtime");
  o.note << t << " s";
}

void zonotopes(Outcome& o) {
  for (std::size_t d = 2; d <= 5; ++d) {
    auto z = zonotope(d);
    std::string tag = "d=" + std::to_string(d);
    o.require(is_terminal(z) && is_reflexive(z), tag + " terminal reflexive");
    o.require(z.vertices().size() == (std::size_t(1) << (d + 1)) - 2, tag + " vertex count");
    auto r = mod_k_analysis(z, 2, z.vertices());
    o.require(r.asserted && r.all_pass(), tag + " mod 2 analysis");
    o.require(r.symmetric_pairs + (std::size_t(1) << d) >= r.size + 1, tag + " pair inequality");
  }
  o.note << "d=2..5";
}

void cubes(Outcome& o) {
  for (std::size_t d = 2; d <= 5; ++d) {
    auto c = cube(d);
    std::string tag = "d=" + std::to_string(d);
    Integer three = 1;
    for (std::size_t i = 0; i < d; ++i) three *= 3;
    o.require(Integer(c.lattice_points().size()) == three, tag + " point count");
    auto r = central_bound_check(c);
    o.require(r.injective, tag + " mod 3 injectivity");
    o.require(r.equality && r.is_cube, tag + " cube recognition");
    o.require(r.all_pass(), tag + " report");
  }
  o.note << "d=2..5";
}

void trichotomy(Outcome& o) {
  std::vector<Polytope> items = polygons();
  for (const auto& p : corpus()) items.push_back(p);
  items.push_back(wirth());
  std::size_t pairs = 0, sums = 0;
  for (const auto& p : items) {
    auto b = p.boundary_lattice_points();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        ++pairs;
        auto c = pair_conditions(p, b[i], b[j]);
        o.require(c.count() == 1, "exactly one class for " + format_vector(b[i]) + " " + format_vector(b[j]));
        if (c.sum) {
          ++sums;
          auto check = verify_prim_properties(p, b[i], b[j]);
          o.require(check.all_pass(), "primitive relation " + check.witness);
        }
      }
  }
  o.require(pairs >= 10000, "pair count");
  o.note << pairs << " pairs, " << sums << " sum pairs";
}

void diameters(Outcome& o) {
  std::vector<Polytope> items = polygons();
  for (const auto& p : corpus()) items.push_back(p);
  std::size_t far = 0;
  for (const auto& p : items) {
    BoundaryGraph g(p, false);
    o.require(g.diameter() >= 0 && g.diameter() <= 3, "diameter of " + p.to_string());
    for (auto [i, j] : g.pairs_at_distance(3)) {
      ++far;
      o.require(is_zero(g.nodes()[i] + g.nodes()[j]), "distance-3 pair not antipodal");
    }
  }
  o.note << items.size() << " polytopes, " << far << " distance-3 pairs";
}

void projections(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t runs = 0;
  for (const auto& p : corpus())
    for (const auto& v : p.boundary_lattice_points()) {
      ++runs;
      auto c = verify_projection_claims(p, v);
      for (std::size_t k = 0; k < c.claims.size(); ++k)
        o.require(c.claims[k].ok, "claim " + std::to_string(k + 1) + " " + c.claims[k].witness);
      o.require(c.all_pass(), "claims at " + format_vector(v));
    }
  double t = seconds_since(t0);
  o.require(t < 600, "runtime");
  o.note << runs << " projections, " << t << " s";
}

void bounds(Outcome& o) {
  std::size_t simplicial = 0;
  for (const auto& p : corpus()) {
    auto b = vertex_bounds(p);
    o.require(b.all_pass(), "vertex bounds " + p.to_string());
    if (!p.is_simplicial()) continue;
    ++simplicial;
    o.require(p.vertices().size() <= 10, "simplicial vertex count");
    for (const auto& v : p.vertices()) {
      std::size_t n = non_star_vertex_count(p, v);
      o.require(n <= 3, "non-star count");
      if (n == 3) o.require(p.is_vertex(-v), "-v is a vertex when the count is 3");
    }
  }
  o.note << corpus().size() << " polytopes, " << simplicial << " simplicial";
}

void discrepancies(Outcome& o) {
  o.require(testing::discrepancy_oracle(hexagon()) == 1, "hexagon oracle");
  o.require(testing::discrepancy_oracle(cube(2)) == 0, "square oracle");
  o.require(discrepancy(hexagon()) == 1, "hexagon");
  o.require(discrepancy(cube(2)) == 0, "square");
  std::vector<Polytope> items = polygons();
  for (std::size_t d = 2; d <= 4; ++d)
    for (const auto& p : {cube(d), zonotope(d), cross(d), simplex(d)}) items.push_back(p);
  items.push_back(cell24());
  items.push_back(wirth());
  items.push_back(hexagon_power(2));
  for (const auto& p : items) {
    Rational a = discrepancy(p);
    o.require(is_terminal(p) == (a > 0), "terminal iff positive");
    o.require(is_canonical(p) == (a >= 0), "canonical iff nonnegative");
    if (p.dim() <= 3) o.require(a == testing::discrepancy_oracle(p), "oracle agreement");
  }
  o.note << items.size() << " gallery polytopes";
}

void facet_characterization(Outcome& o) {
  std::size_t n = 0, terminal = 0;
  for (const auto& p : corpus()) {
    ++n;
    bool t = is_terminal(p);
    terminal += t;
    o.require(facet_characterization_3d(p) == t, "disagreement on " + p.to_string());
  }
  o.require(n >= 200, "corpus size");
  o.note << n << " polytopes, " << terminal << " terminal";
}

void extremal(Outcome& o) {
  auto zz = hexagon_power(2);
  o.require(zz.vertices().size() == 36, "product vertices");
  auto c = conjecture_check(zz);
  o.require(c.vertconj_equality && c.vertconj_type == true, "product equality type");
  auto dz = reflexive_dual(zz);
  o.require(dz.is_simplicial() && dz.vertices().size() == 12, "dual is simplicial with 12 vertices");
  auto s = symmetric_simplicial_check(dz);
  o.require(s.hypothesis && s.equality && s.type == true && s.all_pass(), "dual equality type");
  auto ds = reflexive_dual(product(cube(1), hexagon()));
  o.require(ds.vertices().size() == 8, "8 vertices");
  auto t = symmetric_simplicial_check(ds);
  o.require(t.hypothesis && t.centrally_symmetric && t.equality && t.type == true, "centrally symmetric type");
  o.note << "36, 12, 8 vertices";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"reflexive polygon classification", classification},
      {"twelve relation", twelve},
      {"four-dimensional example with a non-reflexive projection", wirth_example},
      {"24-cell", cell24_example},
      {"zonotope vertex bound", zonotopes},
      {"cube point count", cubes},
      {"pair trichotomy and primitive relations", trichotomy},
      {"boundary graph diameter", diameters},
      {"projection claims", projections},
      {"vertex bounds", bounds},
      {"discrepancy consistency", discrepancies},
      {"facet characterization of terminal 3-polytopes", facet_characterization},
      {"extremal cases", extremal},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    failed += !o.pass;
    std::printf("%s %2zu %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.note.str().c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
