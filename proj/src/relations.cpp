#include "reflex/relations.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "reflex/error.hpp"

namespace reflex {

namespace {

void require_reflexive(const Polytope& p) {
  if (!is_fano(p) || !is_reflexive(p))
    fail(ErrorCode::NotReflexive, p.to_string() + " is not reflexive");
}

void require_boundary_point(const Polytope& p, const IntVector& x) {
  if (x.size() != p.dim()) fail(ErrorCode::DimensionMismatch, "point dimension");
  if (!p.on_boundary(x)) fail(ErrorCode::NotBoundary, format_vector(x) + " is not on the boundary");
}

bool share_facet(const Polytope& p, const IntVector& x, const IntVector& y) {
  return std::any_of(p.facets().begin(), p.facets().end(),
                     [&](const Facet& f) { return f.contains(x) && f.contains(y); });
}

long to_long(const Integer& x) {
  if (!x.fits_slong_p()) fail(ErrorCode::DimensionMismatch, "coordinate too large");
  return x.get_si();
}

}  // namespace

const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::Sim: return "Sim";
    case PairClass::Antipodal: return "Antipodal";
    case PairClass::Sum: return "Sum";
  }
  return "?";
}

PairConditions pair_conditions(const Polytope& p, const IntVector& v, const IntVector& w) {
  require_reflexive(p);
  require_boundary_point(p, v);
  require_boundary_point(p, w);
  if (v == w) fail(ErrorCode::NotBoundary, "the two points coincide");
  PairConditions c;
  c.sim = share_facet(p, v, w);
  c.antipodal = is_zero(v + w);
  c.sum = !c.antipodal && p.on_boundary(v + w);
  return c;
}

PairClass classify_pair(const Polytope& p, const IntVector& v, const IntVector& w) {
  auto c = pair_conditions(p, v, w);
  if (c.sim) return PairClass::Sim;
  if (c.antipodal) return PairClass::Antipodal;
  if (!c.sum)
    fail(ErrorCode::WrongClass, "no case applies to " + format_vector(v) + ", " + format_vector(w));
  return PairClass::Sum;
}

PrimitiveRelation primitive_relation(const Polytope& p, const IntVector& v, const IntVector& w) {
  if (classify_pair(p, v, w) != PairClass::Sum)
    fail(ErrorCode::WrongClass, format_vector(v) + ", " + format_vector(w) + " is not a Sum pair");
  const IntVector s = v + w;
  const Facet* face = nullptr;
  for (const auto& f : p.facets())
    if (f.contains(s)) {
      face = &f;
      break;
    }
  // On this facet one of v, w has value -1 and the other 0.
  const bool step_w = dot(face->normal, v) == -1;
  const IntVector& step = step_w ? w : v;
  const std::size_t limit = p.lattice_points().size();
  IntVector z = s;
  Integer k = 1;
  for (std::size_t iter = 0; iter <= limit; ++iter) {
    if (!face->contains(z)) break;
    if (share_facet(p, z, step)) {
      PrimitiveRelation r{v, w, z, step_w ? Integer(1) : k, step_w ? k : Integer(1)};
      return r;
    }
    z = z + step;
    ++k;
  }
  fail(ErrorCode::WrongClass, "march from " + format_vector(s) + " left the facet");
}

std::vector<std::pair<long, long>> admissible_coefficients(const Polytope& p, const IntVector& v,
                                                           const IntVector& w, long bound) {
  struct Row {
    long nv, nw, c;
  };
  std::vector<Row> rows;
  for (const auto& f : p.facets())
    rows.push_back({to_long(dot(f.normal, v)), to_long(dot(f.normal, w)), to_long(f.level)});
  std::vector<std::pair<long, long>> out;
  for (long a = 1; a <= bound; ++a)
    for (long b = 1; b <= bound; ++b) {
      bool inside = true, boundary = false, with_v = false, with_w = false;
      for (const auto& r : rows) {
        long val = a * r.nv + b * r.nw + r.c;
        if (val < 0) {
          inside = false;
          break;
        }
        if (val == 0) {
          boundary = true;
          if (r.nv + r.c == 0) with_v = true;
          if (r.nw + r.c == 0) with_w = true;
        }
      }
      if (inside && boundary && with_v && with_w) out.emplace_back(a, b);
    }
  return out;
}

Report PrimCheck::to_report() const {
  Report r;
  r.set("prim.z", format_vector(relation.z));
  r.set("prim.a", relation.a.get_str());
  r.set("prim.b", relation.b.get_str());
  r.set_bool("prim.basis", basis);
  r.set_bool("prim.unique", unique);
  r.set_bool("prim.i", i);
  r.set_bool("prim.ii", ii);
  r.set_bool("prim.iii", iii);
  r.set_bool("prim.iv", iv);
  if (!iv_applies) r.set("prim.iv.applies", "false");
  if (!witness.empty()) r.set("prim.witness", witness);
  return r;
}

PrimCheck verify_prim_properties(const Polytope& p, const IntVector& v, const IntVector& w) {
  PrimCheck c;
  c.relation = primitive_relation(p, v, w);
  const IntVector& z = c.relation.z;
  const Integer& a = c.relation.a;
  const Integer& b = c.relation.b;
  auto note = [&](const std::string& s) {
    if (c.witness.empty()) c.witness = s;
  };

  // gcd of the 2x2 minors of [v w].
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      Integer m = v[i] * w[j] - v[j] * w[i];
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
    }
  c.basis = g == 1;
  if (!c.basis) note("v, w not a basis of their span");

  const long bound = static_cast<long>(p.lattice_points().size());
  auto adm = admissible_coefficients(p, v, w, bound);
  c.unique = adm.size() == 1 && adm[0].first == a && adm[0].second == b;
  if (!c.unique) note(std::to_string(adm.size()) + " admissible (a,b)");

  c.i = (a == 1 || b == 1) && a == segment_lattice_count(w, z) - 1 &&
        b == segment_lattice_count(v, z) - 1;
  for (const auto& f : p.facets())
    if (f.contains(v) && f.contains(z) && b * dot(f.normal, w) != a - 1) c.i = false;
  if (!c.i) note("(i) fails");

  c.ii = true;
  for (const IntVector& x : {z, IntVector(v + w)})
    for (const auto& f : p.facets())
      if (f.contains(x) && f.contains(v) == f.contains(w)) c.ii = false;
  if (!c.ii) note("(ii) fails");

  std::set<std::pair<std::size_t, std::size_t>> ridge_pairs;
  for (const auto& r : p.ridges()) {
    ridge_pairs.emplace(r.first, r.second);
    ridge_pairs.emplace(r.second, r.first);
  }
  c.iii = true;
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    if (!p.facets()[f].contains(v) || !p.facets()[f].contains(z)) continue;
    bool found = false;
    for (std::size_t h = 0; h < p.facets().size() && !found; ++h)
      if (p.facets()[h].contains(w) && p.facets()[h].contains(z) && ridge_pairs.count({f, h}))
        found = true;
    if (!found) c.iii = false;
  }
  if (!c.iii) note("(iii) fails");

  std::size_t facets_vz = 0;
  for (const auto& f : p.facets())
    if (f.contains(v) && f.contains(z)) ++facets_vz;
  c.iv_applies = p.is_vertex(z) && b == 1 && facets_vz == 1;
  c.iv = !c.iv_applies || p.minimal_face_dimension({w, z}) == 1;
  if (!c.iv) note("(iv) fails");
  return c;
}

BoundaryGraph::BoundaryGraph(const Polytope& p, bool vertices_only) {
  nodes_ = vertices_only ? p.vertices() : p.boundary_lattice_points();
  const std::size_t n = nodes_.size();
  std::vector<std::vector<std::size_t>> on(n);  // facets through each node
  for (std::size_t i = 0; i < n; ++i) on[i] = p.facets_containing(nodes_[i]);
  adj_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(on[i].begin(), on[i].end(), on[j].begin(), on[j].end(),
                            std::back_inserter(common));
      if (!common.empty()) {
        adj_[i].push_back(j);
        adj_[j].push_back(i);
      }
    }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  dist_.assign(n, std::vector<long>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> queue{s};
    dist_[s][s] = 0;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto x : adj_[u])
        if (dist_[s][x] < 0) {
          dist_[s][x] = dist_[s][u] + 1;
          queue.push_back(x);
        }
    }
  }
}

long BoundaryGraph::diameter() const {
  long d = 0;
  for (const auto& row : dist_)
    for (long x : row) {
      if (x < 0) return -1;
      d = std::max(d, x);
    }
  return d;
}

std::vector<std::pair<std::size_t, std::size_t>> BoundaryGraph::pairs_at_distance(long k) const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    for (std::size_t j = i + 1; j < nodes_.size(); ++j)
      if (dist_[i][j] == k) out.emplace_back(i, j);
  return out;
}

std::string BoundaryGraph::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    out += format_vector(nodes_[i]) + ":";
    for (std::size_t k = 0; k < adj_[i].size(); ++k)
      out += (k ? ", " : " ") + format_vector(nodes_[adj_[i][k]]);
    out += "\n";
  }
  return out;
}

BoundaryGraph boundary_graph(const Polytope& p, bool vertices_only) {
  require_reflexive(p);
  return BoundaryGraph(p, vertices_only);
}

std::size_t non_star_vertex_count(const Polytope& p, const IntVector& v) {
  if (!p.is_simplicial()) fail(ErrorCode::NotSimplicial, p.to_string() + " is not simplicial");
  auto vi = p.vertex_index(v);
  if (!vi) fail(ErrorCode::NotVertex, format_vector(v) + " is not a vertex");
  std::size_t count = 0;
  for (const auto& w : p.vertices())
    if (!share_facet(p, v, w)) ++count;
  return count;
}

std::optional<std::pair<std::size_t, std::size_t>> facet_pair_violation(const Polytope& p) {
  require_reflexive(p);
  const auto& fs = p.facets();
  auto meets = [&](std::size_t f, std::size_t g) {
    const auto& a = fs[f].vertices;
    const auto& b = fs[g].vertices;
    std::vector<std::size_t> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return !common.empty();
  };
  for (std::size_t f = 0; f < fs.size(); ++f)
    for (std::size_t g = f + 1; g < fs.size(); ++g) {
      if (is_zero(fs[f].normal + fs[g].normal) || meets(f, g)) continue;
      bool third = false;
      for (std::size_t h = 0; h < fs.size() && !third; ++h)
        if (h != f && h != g && meets(f, h) && meets(g, h)) third = true;
      if (!third) return std::make_pair(f, g);
    }
  return std::nullopt;
}

}  // namespace reflex
