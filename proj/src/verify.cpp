#include "reflex/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "reflex/bounds.hpp"
#include "reflex/error.hpp"
#include "reflex/projection.hpp"
#include "reflex/relations.hpp"

namespace reflex {

namespace {

class Sweep {
 public:
  Sweep(VerifyReport& out, const std::string& suite) : out_(out), suite_(suite) {}

  CheckRow* row(const std::string& group, const std::string& name, bool asserted = true) {
    if (suite_ != "all" && suite_ != group) return nullptr;
    out_.rows.push_back(CheckRow{name, true, asserted, 0, ""});
    return &out_.rows.back();
  }

 private:
  VerifyReport& out_;
  const std::string& suite_;
};

void record(CheckRow& r, bool ok, const std::function<std::string()>& witness) {
  ++r.cases;
  if (!ok && r.pass) {
    r.pass = false;
    r.witness = witness();
  }
}

void predicates(Sweep& s, const Polytope& p) {
  CheckRow* r = s.row("predicates", "discrepancy");
  if (!r) return;
  const Rational disc = discrepancy(p);
  record(*r, is_terminal(p) == (disc > 0), [&] { return "terminal disagrees with discrepancy " + disc.get_str(); });
  record(*r, is_canonical(p) == (disc >= 0), [&] { return "canonical disagrees with discrepancy " + disc.get_str(); });
  record(*r, disc > -1 && disc <= 1, [&] { return "discrepancy " + disc.get_str() + " out of range"; });
}

void projection(Sweep& s, const Polytope& p) {
  if (p.dim() < 2) return;
  if (CheckRow* r = s.row("projection", "projection")) {
    for (const auto& v : p.boundary_lattice_points()) {
      ProjectionClaims c = verify_projection_claims(p, v);
      record(*r, c.all_pass(), [&] {
        for (std::size_t i = 0; i < c.claims.size(); ++i)
          if (!c.claims[i].ok) return "v=" + format_vector(v) + " claim " + std::to_string(i + 1) + ": " + c.claims[i].witness;
        return "v=" + format_vector(v);
      });
    }
  }
  if (CheckRow* r = s.row("termprop", "termprop")) {
    TermpropResult t = verify_termprop(p);
    record(*r, t.holds(), [&] { return t.witness; });
  }
}

void relations(Sweep& s, const Polytope& p) {
  const auto pts = p.boundary_lattice_points();
  CheckRow* tri = s.row("prim", "trichotomy");
  CheckRow* prim = s.row("prim", "primitive_relation");
  if (tri || prim) {
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (i == j) continue;
        const IntVector& v = pts[i];
        const IntVector& w = pts[j];
        PairConditions c = pair_conditions(p, v, w);
        if (tri) record(*tri, c.count() == 1, [&] { return format_vector(v) + " " + format_vector(w); });
        if (prim && c.sum && c.count() == 1) {
          PrimCheck pc = verify_prim_properties(p, v, w);
          record(*prim, pc.all_pass(), [&] {
            return format_vector(v) + " " + format_vector(w) + (pc.witness.empty() ? "" : ": " + pc.witness);
          });
        }
      }
  }
  if (CheckRow* r = s.row("graph", "graph_diameter")) {
    for (bool vertices_only : {false, true}) {
      BoundaryGraph g = boundary_graph(p, vertices_only);
      const long diam = g.diameter();
      record(*r, diam >= 0 && diam <= 3, [&] { return "diameter " + std::to_string(diam); });
      for (auto [a, b] : g.pairs_at_distance(3))
        record(*r, g.nodes()[a] == -g.nodes()[b], [&] {
          return "distance 3 between " + format_vector(g.nodes()[a]) + " and " + format_vector(g.nodes()[b]);
        });
    }
  }
  if (CheckRow* r = s.row("graph", "facet_pairs")) {
    auto bad = facet_pair_violation(p);
    record(*r, !bad, [&] { return "facets " + std::to_string(bad->first) + " " + std::to_string(bad->second); });
  }
  if (p.is_simplicial() && p.dim() >= 2) {
    if (CheckRow* r = s.row("bounds", "non_star_vertices")) {
      for (const auto& v : p.vertices()) {
        std::size_t n = non_star_vertex_count(p, v);
        record(*r, n <= 3 && (n < 3 || p.is_vertex(-v)),
               [&] { return "v=" + format_vector(v) + " count " + std::to_string(n); });
      }
    }
  }
}

void bounds(Sweep& s, const Polytope& p) {
  const std::size_t d = p.dim();
  if (CheckRow* r = s.row("bounds", "vertex_bounds")) {
    VertexBounds b = vertex_bounds(p);
    record(*r, b.all_pass(), [&] { return b.to_report().to_text(); });
  }
  if (CheckRow* r = s.row("bounds", "lemma_fund")) {
    for (std::size_t f = 0; f < p.facets().size(); ++f) {
      if (p.facets()[f].vertices.size() == d) {
        FundCheck c = lemma_fund_check(p, f);
        record(*r, c.all_pass(), [&] { return "facet " + std::to_string(f) + ": " + c.witness; });
      } else {
        auto m = fund_coverage_violation(p, f);
        record(*r, !m, [&] { return "facet " + std::to_string(f) + " misses " + format_vector(*m); });
      }
    }
  }
  if (p.is_simplicial()) {
    if (CheckRow* r = s.row("bounds", "symmetric_simplicial")) {
      SymmetricSimplicialReport c = symmetric_simplicial_check(p);
      record(*r, c.all_pass(), [&] { return c.to_report().to_text(); });
    }
  }
  if (CheckRow* r = s.row("bounds", "vertconj", false)) {
    ConjectureReport c = conjecture_check(p);
    record(*r, c.vertconj && c.vertconj_type.value_or(true), [&] { return "vertex count " + std::to_string(c.vertices); });
    if (c.mainconj)
      record(*r, *c.mainconj && c.mainconj_type.value_or(true), [&] { return "simplicial vertex count " + std::to_string(c.vertices); });
  }
  if (d == 3) {
    if (CheckRow* r = s.row("bounds", "facet_characterization")) {
      bool ch = facet_characterization_3d(p);
      bool t = is_terminal(p);
      record(*r, ch == t, [&] { return std::string("characterization ") + (ch ? "true" : "false") + ", terminal " + (t ? "true" : "false"); });
    }
  }
  if (d == 2) {
    if (CheckRow* r = s.row("bounds", "polygon")) {
      const Polytope q = reflexive_dual(p);
      const std::size_t sum = p.boundary_lattice_points().size() + q.boundary_lattice_points().size();
      record(*r, sum == 12, [&] { return "boundary points sum to " + std::to_string(sum); });
      record(*r, p.vertices().size() <= 6, [&] { return std::to_string(p.vertices().size()) + " vertices"; });
      for (std::size_t f = 0; f < p.facets().size(); ++f)
        record(*r, p.facet_lattice_points(f).size() <= 5, [&] { return "edge with more than 5 lattice points"; });
    }
  }
}

void counting(Sweep& s, const Polytope& p) {
  if (CheckRow* r = s.row("modk", "mod2")) {
    for (const auto& b : {p.vertices(), p.boundary_lattice_points()}) {
      ModKReport m = mod_k_analysis(p, 2, b);
      record(*r, m.all_pass(), [&] { return m.witness; });
    }
  }
  if (p.is_centrally_symmetric() && is_canonical(p)) {
    if (CheckRow* r = s.row("central", "central")) {
      CentralReport c = central_bound_check(p);
      record(*r, c.all_pass(), [&] { return c.to_report().to_text(); });
    }
    if (p.dim() <= 3 && is_reflexive(p)) {
      if (CheckRow* r = s.row("central", "unit_cube_embedding")) {
        auto u = embed_in_unit_cube(p);
        record(*r, u.has_value(), [] { return std::string("no embedding in [-1,1]^d found"); });
      }
    }
  }
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass || !r.asserted; });
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& r : rows) {
    const char* status = r.pass ? "PASS" : (r.asserted ? "FAIL" : "INFO");
    out << r.name << " " << r.cases << " " << status;
    if (!r.witness.empty()) {
      std::string w = r.witness;
      std::replace(w.begin(), w.end(), '\n', ' ');
      out << " " << w;
    }
    out << "\n";
  }
  out << (all_pass() ? "verify: PASS" : "verify: FAIL") << "\n";
  return out.str();
}

Report VerifyReport::to_report() const {
  Report rep;
  for (const auto& r : rows) {
    rep.set("verify." + r.name, r.pass ? "pass" : (r.asserted ? "fail" : "info"));
    rep.set("verify." + r.name + ".cases", std::to_string(r.cases));
    if (!r.witness.empty()) rep.set("verify." + r.name + ".witness", r.witness);
  }
  rep.set_bool("verify.ok", all_pass());
  return rep;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites = {"predicates", "projection", "termprop", "prim", "graph",
                                                  "bounds",     "modk",       "central"};
  return suites;
}

VerifyReport verify_polytope(const Polytope& p, const std::string& suite) {
  if (suite != "all" && std::find(verify_suites().begin(), verify_suites().end(), suite) == verify_suites().end())
    fail(ErrorCode::UnknownName, "unknown suite '" + suite + "'");
  VerifyReport out;
  out.rows.reserve(32);  // Sweep hands out row pointers
  Sweep s(out, suite);
  if (!p.origin_in_interior()) return out;
  predicates(s, p);
  if (!is_fano(p)) return out;
  counting(s, p);
  if (!is_reflexive(p)) return out;
  projection(s, p);
  relations(s, p);
  bounds(s, p);
  return out;
}

}  // namespace reflex
