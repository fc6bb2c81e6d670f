#include "reflex/reflexive.hpp"

#include <algorithm>
#include <functional>
#include <nlohmann/json.hpp>

#include "reflex/error.hpp"

namespace reflex {

namespace {

void require_fano(const Polytope& p) {
  if (!is_fano(p)) fail(ErrorCode::NotFano, p.to_string() + " is not a Fano polytope");
}

void require_origin(const Polytope& p) {
  if (!p.origin_in_interior())
    fail(ErrorCode::OriginNotInterior, "0 is not an interior point of " + p.to_string());
}

std::optional<IntVector> imprimitive_vertex(const Polytope& p) {
  for (const auto& v : p.vertices())
    if (!is_primitive(v)) return v;
  return std::nullopt;
}

std::optional<IntVector> nonzero_interior_point(const Polytope& p) {
  for (const auto& x : p.lattice_points())
    if (!is_zero(x) && p.in_interior(x)) return x;
  return std::nullopt;
}

std::optional<IntVector> non_vertex_point(const Polytope& p) {
  for (const auto& x : p.lattice_points())
    if (!is_zero(x) && !p.is_vertex(x)) return x;
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> thick_edge(const Polytope& p) {
  const auto& vs = p.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      bool share = false;
      for (auto f : p.vertex_facets(i)) {
        const auto& fv = p.facets()[f].vertices;
        if (std::binary_search(fv.begin(), fv.end(), j)) {
          share = true;
          break;
        }
      }
      if (share && content(vs[j] - vs[i]) != 1) return std::make_pair(i, j);
    }
  return std::nullopt;
}

std::optional<std::size_t> non_level_one_facet(const Polytope& p) {
  for (std::size_t f = 0; f < p.facets().size(); ++f)
    if (p.facets()[f].level != 1) return f;
  return std::nullopt;
}

std::optional<std::size_t> non_unimodular_facet(const Polytope& p) {
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    const auto& fv = p.facets()[f].vertices;
    if (fv.size() != p.dim()) return f;
    auto det = determinant(IntMatrix::from_rows(p.facet_vertex_points(f)));
    if (abs(det) != 1) return f;
  }
  return std::nullopt;
}

std::string facet_witness(const Polytope& p, std::size_t f) {
  return "facet eta=" + format_point(p.facets()[f].eta());
}

}  // namespace

bool is_fano(const Polytope& p) { return p.origin_in_interior() && !imprimitive_vertex(p); }

bool is_reflexive(const Polytope& p) {
  require_fano(p);
  return !non_level_one_facet(p);
}

bool is_canonical(const Polytope& p) {
  require_origin(p);
  return !nonzero_interior_point(p);
}

bool is_terminal(const Polytope& p) {
  require_origin(p);
  return !non_vertex_point(p);
}

bool is_semi_terminal(const Polytope& p) {
  require_fano(p);
  return !thick_edge(p);
}

bool is_smooth(const Polytope& p) {
  require_fano(p);
  return !non_unimodular_facet(p);
}

DualPolytope dual(const Polytope& p) {
  require_origin(p);
  DualPolytope out;
  out.is_lattice = true;
  for (const auto& f : p.facets()) {
    out.vertices.push_back(f.eta());
    if (!out.vertices.back().is_integral()) out.is_lattice = false;
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  if (out.is_lattice) {
    std::vector<IntVector> pts;
    for (const auto& v : out.vertices) pts.push_back(v.num);
    out.polytope = Polytope::hull(pts);
  }
  return out;
}

Polytope reflexive_dual(const Polytope& p) {
  if (!is_fano(p) || !is_reflexive(p))
    fail(ErrorCode::NotReflexive, p.to_string() + " is not reflexive");
  return *dual(p).polytope;
}

Integer gorenstein_index(const Polytope& p) {
  require_fano(p);
  Integer l = 1;
  for (const auto& f : p.facets()) l = lcm(l, f.level);
  return l;
}

Rational discrepancy(const Polytope& p) {
  require_fano(p);
  std::optional<Rational> best;
  for (std::size_t fi = 0; fi < p.facets().size(); ++fi) {
    const auto& f = p.facets()[fi];
    std::vector<IntVector> cone_pts{zero_vector(p.dim())};
    for (const auto& v : p.facet_vertex_points(fi)) cone_pts.push_back(Integer(2) * v);
    auto truncated = Polytope::hull(cone_pts);
    for (const auto& x : truncated.lattice_points()) {
      if (is_zero(x) || (f.contains(x) && p.is_vertex(x))) continue;
      Rational level(-dot(f.normal, x), f.level);
      level.canonicalize();
      if (!best || level < *best) best = level;
    }
  }
  return *best - 1;
}

std::optional<UnimodularMap> embed_in_unit_cube(const Polytope& p) {
  if (!is_fano(p) || !is_reflexive(p))
    fail(ErrorCode::NotReflexive, p.to_string() + " is not reflexive");
  const Polytope q = reflexive_dual(p);
  std::vector<IntVector> candidates;
  for (const auto& y : q.lattice_points())
    if (!is_zero(y)) candidates.push_back(y);
  const std::size_t d = p.dim();
  // Covectors usable as a row: |<b, v>| <= 1 on every vertex.
  std::vector<IntVector> rows;
  for (const auto& b : candidates) {
    bool ok = std::all_of(p.vertices().begin(), p.vertices().end(), [&](const IntVector& v) {
      Integer s = dot(b, v);
      return s >= -1 && s <= 1;
    });
    if (ok) rows.push_back(b);
  }
  std::vector<std::size_t> pick;
  std::optional<UnimodularMap> found;
  std::function<void(std::size_t)> search = [&](std::size_t start) {
    if (found) return;
    if (pick.size() == d) {
      std::vector<IntVector> m;
      for (auto i : pick) m.push_back(rows[i]);
      auto mat = IntMatrix::from_rows(m);
      if (abs(determinant(mat)) == 1) found.emplace(mat);
      return;
    }
    for (std::size_t i = start; i < rows.size() && !found; ++i) {
      pick.push_back(i);
      std::vector<IntVector> partial;
      for (auto k : pick) partial.push_back(rows[k]);
      if (rank(partial) == partial.size()) search(i + 1);
      pick.pop_back();
    }
  };
  search(0);
  return found;
}

void Report::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : entries_)
    if (k == key) {
      v = value;
      return;
    }
  entries_.emplace_back(key, value);
}

std::optional<std::string> Report::get(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  return std::nullopt;
}

void Report::append(const Report& other, const std::string& prefix) {
  for (const auto& [k, v] : other.entries_) set(prefix + k, v);
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + "=" + v + "\n";
  return out;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : entries_) {
    if (v == "true" || v == "false") {
      j[k] = (v == "true");
    } else if (!v.empty() && v.find_first_not_of("-0123456789") == std::string::npos &&
               v != "-" && v.size() < 18) {
      j[k] = std::stoll(v);
    } else {
      j[k] = v;
    }
  }
  return j.dump(2) + "\n";
}

Report PredicateReport::to_report() const {
  Report r;
  r.set_bool("fano", fano);
  r.set_bool("canonical", canonical);
  r.set_bool("terminal", terminal);
  r.set_bool("semi_terminal", semi_terminal);
  r.set_bool("reflexive", reflexive);
  r.set_bool("smooth", smooth);
  r.set_bool("simplicial", simplicial);
  r.set_bool("centrally_symmetric", centrally_symmetric);
  r.set("index", gorenstein_index ? gorenstein_index->get_str() : "n/a");
  r.set("discrepancy", discrepancy ? discrepancy->get_str() : "n/a");
  for (const auto& [k, v] : witnesses) r.set("witness." + k, v);
  return r;
}

PredicateReport check_predicates(const Polytope& p) {
  PredicateReport r;
  r.simplicial = p.is_simplicial();
  r.centrally_symmetric = p.is_centrally_symmetric();
  const bool origin = p.origin_in_interior();
  if (!origin) {
    for (std::size_t f = 0; f < p.facets().size(); ++f)
      if (p.facets()[f].level <= 0) {
        r.witnesses["fano"] = "0 not interior, facet normal=" +
                              format_vector(p.facets()[f].normal) +
                              " level=" + p.facets()[f].level.get_str();
        break;
      }
    return r;
  }
  if (auto x = nonzero_interior_point(p)) r.witnesses["canonical"] = format_vector(*x);
  else r.canonical = true;
  if (auto x = non_vertex_point(p)) r.witnesses["terminal"] = format_vector(*x);
  else r.terminal = true;
  if (auto v = imprimitive_vertex(p)) {
    r.witnesses["fano"] = "imprimitive vertex " + format_vector(*v);
    return r;
  }
  r.fano = true;
  if (auto e = thick_edge(p))
    r.witnesses["semi_terminal"] =
        format_vector(p.vertices()[e->first]) + " " + format_vector(p.vertices()[e->second]);
  else r.semi_terminal = true;
  if (auto f = non_level_one_facet(p)) r.witnesses["reflexive"] = facet_witness(p, *f);
  else r.reflexive = true;
  if (auto f = non_unimodular_facet(p)) r.witnesses["smooth"] = facet_witness(p, *f);
  else r.smooth = true;
  r.gorenstein_index = gorenstein_index(p);
  r.discrepancy = discrepancy(p);
  return r;
}

}  // namespace reflex
