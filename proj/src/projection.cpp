#include "reflex/projection.hpp"

#include <algorithm>
#include <set>

#include "reflex/cone.hpp"
#include "reflex/error.hpp"
#include "subsets.hpp"

namespace reflex {

namespace {

void require_reflexive(const Polytope& p) {
  if (!is_fano(p) || !is_reflexive(p))
    fail(ErrorCode::NotReflexive, p.to_string() + " is not reflexive");
}

void require_boundary(const Polytope& p, const IntVector& x) {
  if (x.size() != p.dim()) fail(ErrorCode::DimensionMismatch, "point dimension");
  if (!p.on_boundary(x))
    fail(ErrorCode::NotOnBoundary, format_vector(x) + " is not a boundary point");
}

RationalPoint apply(const IntMatrix& m, const RationalPoint& x) {
  return RationalPoint(m * x.num, x.den);
}

bool all_levels_one(const Polytope& p) {
  return std::all_of(p.facets().begin(), p.facets().end(),
                     [](const Facet& f) { return f.level == 1; });
}

bool on_facet(const Facet& f, const RationalPoint& x) {
  return dot(f.normal, x.num) + f.level * x.den == 0;
}

bool on_boundary(const Polytope& p, const RationalPoint& x) {
  return p.contains(x) && !p.facets_containing(x).empty();
}

RationalPoint barycenter(const std::vector<IntVector>& pts) {
  IntVector sum = zero_vector(pts[0].size());
  for (const auto& x : pts) sum = sum + x;
  return RationalPoint(sum, Integer(static_cast<unsigned long>(pts.size())));
}

}  // namespace

Star star(const Polytope& p, const IntVector& x) {
  require_boundary(p, x);
  Star s;
  s.facets = p.facets_containing(x);
  std::set<IntVector, LexLess> pts;
  for (const auto& y : p.lattice_points())
    for (auto f : s.facets)
      if (p.facets()[f].contains(y)) {
        pts.insert(y);
        break;
      }
  s.points.assign(pts.begin(), pts.end());
  std::sort(s.points.begin(), s.points.end(), graded_lex_less);
  return s;
}

bool is_away(const Polytope& p, const IntVector& y, const IntVector& x) {
  for (const auto& f : p.facets())
    if (f.contains(y) && !f.contains(x)) return true;
  return false;
}

bool is_away_local(const Polytope& p, const IntVector& y, const IntVector& x) {
  return p.max_step(RationalPoint(y), y - x) == 0;
}

std::optional<RationalPoint> line_exit(const Polytope& p, const RationalPoint& x,
                                       const IntVector& dir) {
  std::optional<Rational> lo, hi;
  for (const auto& f : p.facets()) {
    Integer a = dot(f.normal, dir);
    Rational b(dot(f.normal, x.num) + f.level * x.den, x.den);
    b.canonicalize();
    if (a == 0) {
      if (b < 0) return std::nullopt;
      continue;
    }
    Rational t = -b / Rational(a);
    if (a > 0) {
      if (!lo || t > *lo) lo = t;
    } else {
      if (!hi || t < *hi) hi = t;
    }
  }
  if (!hi) fail(ErrorCode::NotFullDimensional, "unbounded line in a polytope");
  if (lo && *lo > *hi) return std::nullopt;
  auto q = x.coords();
  for (std::size_t i = 0; i < q.size(); ++i) q[i] += *hi * Rational(dir[i]);
  return RationalPoint::from_coords(q);
}

RationalPoint ProjectionResult::rho(const RationalPoint& y) const {
  auto top = line_exit(source, apply(quotient.lift, y), direction);
  if (!top) fail(ErrorCode::NotOnBoundary, format_point(y) + " is not in the projection");
  return *top;
}

ProjectionResult project(const Polytope& p, const IntVector& v) {
  require_boundary(p, v);
  if (!is_primitive(v)) fail(ErrorCode::NotPrimitive, format_vector(v) + " is not primitive");
  if (p.dim() < 2) fail(ErrorCode::WrongDimension, "projection needs dimension >= 2");
  auto q = quotient_projection(v);
  std::vector<IntVector> images;
  for (const auto& x : p.vertices()) images.push_back(q.project(x));
  ProjectionResult r{p, v, q, Polytope::hull(images), {}};
  for (const auto& m : r.image.lattice_points()) r.lift_table.emplace(m, r.rho(RationalPoint(m)));
  return r;
}

bool ProjectionClaims::all_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.ok; });
}

Report ProjectionClaims::to_report() const {
  Report r;
  for (std::size_t i = 0; i < claims.size(); ++i) {
    const std::string key = "proj.claim" + std::to_string(i + 1);
    r.set_bool(key, claims[i].ok);
    if (!claims[i].applies) r.set(key + ".applies", "false");
    if (!claims[i].ok) r.set(key + ".witness", claims[i].witness);
  }
  r.set_bool("proj.image_reflexive", image_reflexive);
  r.set_bool("proj.slice_lattice", slice_is_lattice);
  return r;
}

ProjectionClaims verify_projection_claims(const Polytope& p, const IntVector& v) {
  require_reflexive(p);
  const ProjectionResult pr = project(p, v);
  const QuotientProjection& q = pr.quotient;
  const Polytope& pv = pr.image;
  const std::size_t d = p.dim();
  const auto star_facets = p.facets_containing(v);
  auto in_star = [&](const RationalPoint& x) {
    return std::any_of(star_facets.begin(), star_facets.end(),
                       [&](std::size_t f) { return on_facet(p.facets()[f], x); });
  };
  auto away_from_v = [&](const RationalPoint& x) {
    for (auto f : p.facets_containing(x))
      if (!p.facets()[f].contains(v)) return true;
    return false;
  };

  // Sample of points of P: lattice points, facet and ridge barycenters.
  std::vector<RationalPoint> sample;
  for (const auto& x : p.lattice_points()) sample.emplace_back(x);
  for (std::size_t f = 0; f < p.facets().size(); ++f)
    sample.push_back(barycenter(p.facet_vertex_points(f)));
  for (const auto& r : p.ridges()) {
    std::vector<IntVector> pts;
    for (auto i : r.vertices) pts.push_back(p.vertices()[i]);
    sample.push_back(barycenter(pts));
  }

  ProjectionClaims out;
  auto& c1 = out.claims[0];
  auto& c2 = out.claims[1];
  auto& c3 = out.claims[2];
  auto& c4 = out.claims[3];
  auto& c5 = out.claims[4];
  auto& c6 = out.claims[5];
  auto& c7 = out.claims[6];
  auto& c8 = out.claims[7];

  // (1) U = st(v) and P_v = conv(Pi(V(P) ∩ ∂v)).
  for (const auto& x : sample) {
    bool in_u = p.max_step(x, v) == 0;
    if (in_u != in_star(x)) c1.fail_with("point " + format_point(x));
  }
  {
    std::vector<IntVector> link_images;
    for (const auto& w : p.vertices())
      if (w != v && in_star(RationalPoint(w))) link_images.push_back(q.project(w));
    if (link_images.empty() || affine_dimension(link_images) != static_cast<long>(d - 1) ||
        Polytope::hull(link_images).vertices() != pv.vertices())
      c1.fail_with("P_v differs from the hull of projected link vertices");
  }

  // (2) Pi: st(v) ∩ M -> P_v ∩ M_v is a bijection, inverse rho.
  const Star st = star(p, v);
  {
    std::set<IntVector, LexLess> images;
    for (const auto& x : st.points)
      if (!images.insert(q.project(x)).second) c2.fail_with("two star points over " + format_vector(q.project(x)));
    std::set<IntVector, LexLess> targets(pv.lattice_points().begin(), pv.lattice_points().end());
    if (images != targets) c2.fail_with("image of st(v) ∩ M is not P_v ∩ M_v");
    for (const auto& [m, x] : pr.lift_table) {
      if (!x.is_integral() || !in_star(x) || q.project(x.num) != m)
        c2.fail_with("rho" + format_vector(m) + " = " + format_point(x));
    }
  }

  // (3) ∂v <-> ∂P_v, covering by projected ridges.
  {
    std::set<IntVector, LexLess> link_images;
    for (const auto& x : st.points)
      if (away_from_v(RationalPoint(x))) link_images.insert(q.project(x));
    auto bd = pv.boundary_lattice_points();
    std::set<IntVector, LexLess> targets(bd.begin(), bd.end());
    if (link_images != targets) c3.fail_with("projected link points differ from ∂P_v ∩ M_v");
    for (const auto& x : sample) {
      if (!in_star(x)) continue;
      if (away_from_v(x) != on_boundary(pv, apply(q.proj, x)))
        c3.fail_with("link membership of " + format_point(x));
    }
    std::vector<const Ridge*> link_ridges;
    for (const auto& r : p.ridges()) {
      bool a = p.facets()[r.first].contains(v), b = p.facets()[r.second].contains(v);
      if (a == b) continue;
      link_ridges.push_back(&r);
      std::vector<IntVector> imgs;
      for (auto i : r.vertices) imgs.push_back(q.project(p.vertices()[i]));
      bool inside = false;
      for (const auto& g : pv.facets())
        if (std::all_of(imgs.begin(), imgs.end(), [&](const IntVector& y) { return g.contains(y); })) {
          inside = true;
          break;
        }
      if (!inside) c3.fail_with("projected ridge not in a facet of P_v");
    }
    std::vector<RationalPoint> probes;
    for (const auto& y : bd) probes.emplace_back(y);
    for (std::size_t g = 0; g < pv.facets().size(); ++g)
      probes.push_back(barycenter(pv.facet_vertex_points(g)));
    for (const auto& y : probes) {
      RationalPoint x = pr.rho(y);
      bool covered = std::any_of(link_ridges.begin(), link_ridges.end(), [&](const Ridge* r) {
        return on_facet(p.facets()[r->first], x) && on_facet(p.facets()[r->second], x);
      });
      if (!covered) c3.fail_with("∂P_v point " + format_point(y) + " not covered");
    }
  }

  // (4) rho(V(P_v)) ⊆ V(P) ∩ ∂v; link vertices map to the boundary.
  for (const auto& y : pv.vertices()) {
    RationalPoint x = pr.rho(RationalPoint(y));
    if (!x.is_integral() || !p.is_vertex(x.num) || !in_star(x) || !away_from_v(x))
      c4.fail_with("rho" + format_vector(y) + " = " + format_point(x));
  }
  for (const auto& z : p.vertices()) {
    if (z == v || !in_star(RationalPoint(z))) continue;
    IntVector img = q.project(z);
    if (!pv.on_boundary(img)) c4.fail_with("image of " + format_vector(z) + " is interior");
    std::size_t common = 0;
    for (auto f : star_facets)
      if (p.facets()[f].contains(z)) ++common;
    if (common == 1 && !pv.is_vertex(img))
      c4.fail_with("image of " + format_vector(z) + " is not a vertex");
  }

  // (5) pos(Pi(F)) ∩ P_v = Pi(F) for facets F ∋ v.
  for (auto f : star_facets) {
    std::vector<IntVector> imgs;
    for (const auto& x : p.facet_vertex_points(f)) imgs.push_back(q.project(x));
    Polytope piece = Polytope::hull(imgs);
    std::vector<IntVector> normals;
    std::vector<Integer> levels;
    for (const auto& g : piece.facets())
      if (g.level == 0) {
        normals.push_back(g.normal);
        levels.push_back(0);
      }
    for (const auto& g : pv.facets()) {
      normals.push_back(g.normal);
      levels.push_back(g.level);
    }
    auto cut = vertices_of_inequalities(normals, levels);
    std::vector<RationalPoint> expected;
    for (const auto& x : piece.vertices()) expected.emplace_back(x);
    std::sort(expected.begin(), expected.end());
    if (cut != expected) c5.fail_with("facet eta=" + format_point(p.facets()[f].eta()));
  }

  // (6) Parallel facets and preimages of facets of P_v.
  {
    std::set<std::pair<std::size_t, std::size_t>> ridge_pairs;
    for (const auto& r : p.ridges()) {
      ridge_pairs.emplace(r.first, r.second);
      ridge_pairs.emplace(r.second, r.first);
    }
    for (std::size_t f = 0; f < p.facets().size(); ++f) {
      const Facet& fac = p.facets()[f];
      if (dot(fac.normal, v) != 0) continue;
      std::vector<IntVector> imgs;
      for (const auto& x : p.facet_vertex_points(f)) imgs.push_back(q.project(x));
      std::optional<std::size_t> target;
      for (std::size_t g = 0; g < pv.facets().size(); ++g)
        if (std::all_of(imgs.begin(), imgs.end(),
                        [&](const IntVector& y) { return pv.facets()[g].contains(y); }))
          target = g;
      const std::string tag = "parallel facet eta=" + format_point(fac.eta());
      if (!target) {
        c6.fail_with(tag + " does not map into a facet");
        continue;
      }
      auto fverts = pv.facet_vertex_points(*target);
      for (const auto& y : fverts)
        if (std::find(imgs.begin(), imgs.end(), y) == imgs.end())
          c6.fail_with(tag + " image misses vertex " + format_vector(y));
      for (const auto& x : p.vertices())
        if (pv.facets()[*target].contains(q.project(x)) && !fac.contains(x))
          c6.fail_with(tag + " preimage contains " + format_vector(x));
      std::size_t in_s = 0;
      for (auto i : fac.vertices)
        if (in_star(RationalPoint(p.vertices()[i]))) ++in_s;
      if (in_s < fverts.size()) c6.fail_with(tag + " has too few vertices in st(v)");
      std::vector<RationalPoint> probes;
      for (const auto& x : p.facet_lattice_points(f)) probes.emplace_back(x);
      for (auto i : fac.vertices) probes.emplace_back(p.vertices()[i]);
      for (const auto& x : probes) {
        if (!in_star(x)) continue;
        bool found = false;
        for (auto g : star_facets)
          if (on_facet(p.facets()[g], x) && ridge_pairs.count({f, g})) found = true;
        if (!found) c6.fail_with(tag + " point " + format_point(x) + " has no ridge partner");
      }
    }
    for (std::size_t g = 0; g < pv.facets().size(); ++g) {
      std::vector<std::size_t> gamma;
      for (std::size_t i = 0; i < p.vertices().size(); ++i)
        if (pv.facets()[g].contains(q.project(p.vertices()[i]))) gamma.push_back(i);
      std::vector<IntVector> gpts;
      for (auto i : gamma) gpts.push_back(p.vertices()[i]);
      const std::string tag = "preimage of facet " + format_vector(pv.facets()[g].normal);
      bool parallel_facet = false;
      for (const auto& fac : p.facets())
        if (dot(fac.normal, v) == 0 && fac.vertices == gamma) parallel_facet = true;
      if (parallel_facet) continue;
      if (affine_dimension(gpts) != static_cast<long>(d) - 2) {
        c6.fail_with(tag + " is neither a parallel facet nor a ridge");
        continue;
      }
      std::vector<std::size_t> containing;
      for (std::size_t f = 0; f < p.facets().size(); ++f)
        if (std::all_of(gpts.begin(), gpts.end(),
                        [&](const IntVector& x) { return p.facets()[f].contains(x); }))
          containing.push_back(f);
      if (p.common_vertices(containing) != gamma) c6.fail_with(tag + " is not a face");
      std::set<IntVector, LexLess> imgs;
      for (const auto& x : gpts) imgs.insert(q.project(x));
      if (imgs.size() != gpts.size()) c6.fail_with(tag + " does not map isomorphically");
      std::size_t with_v = 0;
      for (auto f : containing)
        if (p.facets()[f].contains(v)) ++with_v;
      if (with_v != 1) c6.fail_with(tag + " lies in " + std::to_string(with_v) + " facets with v");
    }
  }

  // (7) -v in P: every facet contains v or -v or is parallel to v.
  if (p.contains(-v)) {
    for (const auto& f : p.facets())
      if (!f.contains(v) && !f.contains(-v) && dot(f.normal, v) != 0)
        c7.fail_with("facet eta=" + format_point(f.eta()));
  } else {
    c7.applies = false;
  }

  // (8) (P_v)* equals the slice P* ∩ v-perp in the coordinates lift^T.
  {
    std::vector<RationalPoint> slice;
    for (const auto& f : p.facets())
      if (dot(f.normal, v) == 0) slice.emplace_back(f.normal);
    for (const auto& r : p.ridges()) {
      const auto& nf = p.facets()[r.first].normal;
      const auto& ng = p.facets()[r.second].normal;
      Integer a = dot(nf, v), b = dot(ng, v);
      if (a * b >= 0) continue;
      slice.emplace_back(b * nf - a * ng, b - a);
    }
    IntMatrix lt = q.lift.transpose();
    std::vector<RationalPoint> local;
    for (const auto& y : slice) {
      if (dot(y.num, v) != 0) c8.fail_with("slice point off v-perp");
      local.push_back(apply(lt, y));
    }
    auto slice_vertices = rational_hull_vertices(local);
    out.slice_is_lattice = std::all_of(slice_vertices.begin(), slice_vertices.end(),
                                       [](const RationalPoint& y) { return y.is_integral(); });
    out.image_reflexive = all_levels_one(pv);
    if (slice_vertices != dual(pv).vertices) c8.fail_with("dual of P_v differs from the slice");
    if (out.slice_is_lattice != out.image_reflexive)
      c8.fail_with("reflexivity of P_v disagrees with integrality of the slice");
  }
  return out;
}

std::optional<Integer> f_condition(const Polytope& p, const IntVector& v) {
  auto vi = p.vertex_index(v);
  if (!vi) fail(ErrorCode::NotVertex, format_vector(v) + " is not a vertex");
  std::optional<Integer> f;
  for (std::size_t w = 0; w < p.vertices().size(); ++w) {
    if (w == *vi) continue;
    bool adjacent = false;
    for (auto g : p.vertex_facets(*vi))
      if (p.facets()[g].contains(p.vertices()[w])) adjacent = true;
    if (!adjacent) continue;
    Integer c = content(p.vertices()[w] - v);
    if (!f) f = c;
    else if (*f != c) return std::nullopt;
  }
  return f;
}

bool z_basis_condition(const Polytope& p, const IntVector& v) {
  require_reflexive(p);
  auto vi = p.vertex_index(v);
  if (!vi) fail(ErrorCode::NotVertex, format_vector(v) + " is not a vertex");
  const std::size_t d = p.dim();
  for (const auto& r : p.ridges()) {
    const Facet& a = p.facets()[r.first];
    const Facet& b = p.facets()[r.second];
    if (a.contains(v) == b.contains(v)) continue;
    std::vector<IntVector> shifted;
    for (const auto& x : p.lattice_points())
      if (a.contains(x) && b.contains(x)) shifted.push_back(x - v);
    bool found = detail::any_subset(shifted.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
      std::vector<IntVector> cols;
      for (auto i : idx) cols.push_back(shifted[i]);
      cols.push_back(v);
      return abs(determinant(IntMatrix::from_columns(cols))) == 1;
    });
    if (!found) return false;
  }
  return true;
}

Report TermpropResult::to_report() const {
  Report r;
  r.set_bool("termprop.semi_terminal", semi_terminal);
  r.set_bool("termprop.all_projections_fano", all_projections_fano);
  r.set_bool("termprop.terminal", terminal);
  r.set_bool("termprop.all_projections_canonical", all_projections_canonical);
  r.set_bool("termprop.holds", holds());
  if (!witness.empty()) r.set("termprop.witness", witness);
  return r;
}

TermpropResult verify_termprop(const Polytope& p) {
  require_reflexive(p);
  TermpropResult r;
  r.semi_terminal = is_semi_terminal(p);
  r.terminal = is_terminal(p);
  r.all_projections_fano = true;
  r.all_projections_canonical = true;
  for (const auto& v : p.vertices()) {
    const Polytope pv = project(p, v).image;
    const bool fano = is_fano(pv);
    const bool canonical = fano && is_canonical(pv);
    if (!fano && r.all_projections_fano) r.witness = "P_v not Fano for v=" + format_vector(v);
    if (!canonical && r.all_projections_canonical && r.witness.empty())
      r.witness = "P_v not canonical for v=" + format_vector(v);
    r.all_projections_fano = r.all_projections_fano && fano;
    r.all_projections_canonical = r.all_projections_canonical && canonical;
  }
  return r;
}

}  // namespace reflex
