#include "reflex/polytope.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "reflex/cone.hpp"
#include "reflex/error.hpp"

namespace reflex {

struct Polytope::Impl {
  std::size_t dim = 0;
  std::vector<IntVector> vertices;
  std::vector<Facet> facets;
  std::vector<std::vector<std::size_t>> vertex_facets;
  std::map<IntVector, std::size_t, LexLess> vertex_lookup;

  mutable std::once_flag points_once;
  mutable std::vector<IntVector> points;
  mutable std::once_flag ridges_once;
  mutable std::vector<Ridge> ridges;
};

namespace {

bool facet_less(const Facet& a, const Facet& b) {
  if (a.level != b.level) return a.level < b.level;
  return lex_compare(a.normal, b.normal) < 0;
}

}  // namespace

Polytope Polytope::hull(const std::vector<IntVector>& input) {
  if (input.empty()) fail(ErrorCode::NotFullDimensional, "no points");
  const std::size_t d = input[0].size();
  if (d == 0) fail(ErrorCode::NotFullDimensional, "dimension 0");
  std::vector<IntVector> pts;
  for (const auto& p : input) {
    if (p.size() != d) fail(ErrorCode::DimensionMismatch, "points of mixed dimension");
    pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end(), LexLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (affine_dimension(pts) != static_cast<long>(d))
    fail(ErrorCode::NotFullDimensional, "points do not affinely span Q^" + std::to_string(d));

  std::vector<IntVector> cons;
  cons.reserve(pts.size());
  for (const auto& p : pts) {
    IntVector c(d + 1);
    c[0] = 1;
    for (std::size_t j = 0; j < d; ++j) c[j + 1] = p[j];
    cons.push_back(std::move(c));
  }
  auto rays = extreme_rays(cons);

  struct RawFacet {
    IntVector normal;
    Integer level;
  };
  std::vector<RawFacet> raw;
  for (const auto& r : rays) {
    IntVector n(r.begin() + 1, r.end());
    auto [prim, g] = primitivize(n);
    Integer lvl = r[0] / g;  // exact: r[0] = -min <n, p>
    raw.push_back({std::move(prim), std::move(lvl)});
  }

  // A point is a vertex iff the normals of its incident facets have rank d.
  std::vector<IntVector> verts;
  for (const auto& p : pts) {
    std::vector<IntVector> normals;
    for (const auto& f : raw)
      if (dot(f.normal, p) + f.level == 0) normals.push_back(f.normal);
    if (normals.size() >= d && rank(normals) == d) verts.push_back(p);
  }
  std::sort(verts.begin(), verts.end(), graded_lex_less);

  auto impl = std::make_shared<Impl>();
  impl->dim = d;
  impl->vertices = std::move(verts);
  for (auto& f : raw) impl->facets.push_back(Facet{std::move(f.normal), std::move(f.level), {}});
  std::sort(impl->facets.begin(), impl->facets.end(), facet_less);
  impl->vertex_facets.assign(impl->vertices.size(), {});
  for (std::size_t fi = 0; fi < impl->facets.size(); ++fi) {
    auto& f = impl->facets[fi];
    for (std::size_t vi = 0; vi < impl->vertices.size(); ++vi)
      if (f.contains(impl->vertices[vi])) {
        f.vertices.push_back(vi);
        impl->vertex_facets[vi].push_back(fi);
      }
  }
  for (std::size_t vi = 0; vi < impl->vertices.size(); ++vi)
    impl->vertex_lookup.emplace(impl->vertices[vi], vi);
  return Polytope(std::move(impl));
}

std::size_t Polytope::dim() const { return impl_->dim; }
const std::vector<IntVector>& Polytope::vertices() const { return impl_->vertices; }
const std::vector<Facet>& Polytope::facets() const { return impl_->facets; }
const std::vector<std::size_t>& Polytope::vertex_facets(std::size_t i) const {
  return impl_->vertex_facets.at(i);
}

std::optional<std::size_t> Polytope::vertex_index(const IntVector& x) const {
  auto it = impl_->vertex_lookup.find(x);
  if (it == impl_->vertex_lookup.end()) return std::nullopt;
  return it->second;
}

bool Polytope::contains(const IntVector& x) const {
  if (x.size() != dim()) fail(ErrorCode::DimensionMismatch, "point dimension");
  for (const auto& f : facets())
    if (f.slack(x) < 0) return false;
  return true;
}

bool Polytope::contains(const RationalPoint& x) const {
  if (x.dim() != dim()) fail(ErrorCode::DimensionMismatch, "point dimension");
  for (const auto& f : facets())
    if (dot(f.normal, x.num) + f.level * x.den < 0) return false;
  return true;
}

bool Polytope::in_interior(const IntVector& x) const {
  for (const auto& f : facets())
    if (f.slack(x) <= 0) return false;
  return true;
}

std::vector<std::size_t> Polytope::facets_containing(const IntVector& x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < facets().size(); ++i)
    if (facets()[i].contains(x)) out.push_back(i);
  return out;
}

std::vector<std::size_t> Polytope::facets_containing(const RationalPoint& x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < facets().size(); ++i) {
    const auto& f = facets()[i];
    if (dot(f.normal, x.num) + f.level * x.den == 0) out.push_back(i);
  }
  return out;
}

namespace {

// Lattice points by slicing: shadows[j], the projection onto coordinates
// j..d-1, is the hull of the projected vertices, and its facets give the
// exact range of x_j once x_{j+1..d-1} are fixed.
std::vector<IntVector> sliced_points(const Polytope& p) {
  const std::size_t d = p.dim();
  std::vector<Polytope> shadows{p};
  for (std::size_t j = 1; j < d; ++j) {
    std::vector<IntVector> pts;
    for (const auto& v : p.vertices()) pts.emplace_back(v.begin() + static_cast<long>(j), v.end());
    shadows.push_back(Polytope::hull(pts));
  }
  std::vector<IntVector> out;
  IntVector x(d);
  auto rec = [&](auto&& self, std::size_t j) -> void {
    std::optional<Integer> lo, hi;
    for (const auto& f : shadows[j].facets()) {
      Integer rest = f.level;
      for (std::size_t i = 1; i < f.normal.size(); ++i) rest += f.normal[i] * x[j + i];
      const Integer& a = f.normal[0];
      if (a == 0) {
        if (rest < 0) return;
        continue;
      }
      Integer b;
      if (a > 0) {
        mpz_cdiv_q(b.get_mpz_t(), Integer(-rest).get_mpz_t(), a.get_mpz_t());
        if (!lo || b > *lo) lo = b;
      } else {
        mpz_fdiv_q(b.get_mpz_t(), rest.get_mpz_t(), Integer(-a).get_mpz_t());
        if (!hi || b < *hi) hi = b;
      }
    }
    for (x[j] = *lo; x[j] <= *hi; ++x[j]) {
      if (j == 0) out.push_back(x);
      else self(self, j - 1);
    }
  };
  rec(rec, d - 1);
  return out;
}

// Unimodular U making the vertex coordinates small: from a vertex basis B
// whose determinant no single exchange increases, every vertex has
// coordinates in [-1, 1] over B, and U B = H is in Hermite form.
IntMatrix shrinking_map(const Polytope& p) {
  const auto& vs = p.vertices();
  const std::size_t d = p.dim();
  std::vector<IntVector> basis;
  for (const auto& v : vs) {
    basis.push_back(v);
    if (rank(basis) < basis.size()) basis.pop_back();
    if (basis.size() == d) break;
  }
  bool improved = true;
  while (improved) {
    improved = false;
    auto inv = rational_inverse(IntMatrix::from_columns(basis));
    for (const auto& v : vs) {
      for (std::size_t i = 0; i < d && !improved; ++i) {
        Rational c = 0;
        for (std::size_t k = 0; k < d; ++k) c += inv[i][k] * v[k];
        if (abs(c) > 1) {
          basis[i] = v;
          improved = true;
        }
      }
      if (improved) break;
    }
  }
  return hermite_normal_form(IntMatrix::from_columns(basis)).second.matrix();
}

}  // namespace

const std::vector<IntVector>& Polytope::lattice_points() const {
  std::call_once(impl_->points_once, [this] {
    const std::size_t d = dim();
    Integer box = 1;
    for (std::size_t i = 0; i < d; ++i) {
      Integer lo = vertices()[0][i], hi = lo;
      for (const auto& v : vertices()) {
        if (v[i] < lo) lo = v[i];
        if (v[i] > hi) hi = v[i];
      }
      box *= hi - lo + 1;
    }
    std::vector<IntVector> out;
    if (box <= 100000) {
      out = sliced_points(*this);
    } else {
      const IntMatrix u = shrinking_map(*this);
      const IntMatrix back = unimodular_inverse(u);
      std::vector<IntVector> moved;
      for (const auto& v : vertices()) moved.push_back(u * v);
      for (const auto& y : sliced_points(hull(moved))) out.push_back(back * y);
    }
    std::sort(out.begin(), out.end(), graded_lex_less);
    impl_->points = std::move(out);
  });
  return impl_->points;
}

std::vector<IntVector> Polytope::interior_lattice_points() const {
  std::vector<IntVector> out;
  for (const auto& x : lattice_points())
    if (in_interior(x)) out.push_back(x);
  return out;
}

std::vector<IntVector> Polytope::boundary_lattice_points() const {
  std::vector<IntVector> out;
  for (const auto& x : lattice_points())
    if (!in_interior(x)) out.push_back(x);
  return out;
}

std::vector<IntVector> Polytope::facet_lattice_points(std::size_t f) const {
  std::vector<IntVector> out;
  for (const auto& x : lattice_points())
    if (facets()[f].contains(x)) out.push_back(x);
  return out;
}

std::vector<std::size_t> Polytope::common_vertices(const std::vector<std::size_t>& fs) const {
  std::vector<std::size_t> out;
  if (fs.empty()) {
    for (std::size_t i = 0; i < vertices().size(); ++i) out.push_back(i);
    return out;
  }
  out = facets()[fs[0]].vertices;
  for (std::size_t k = 1; k < fs.size(); ++k) {
    const auto& other = facets()[fs[k]].vertices;
    std::vector<std::size_t> tmp;
    std::set_intersection(out.begin(), out.end(), other.begin(), other.end(),
                          std::back_inserter(tmp));
    out = std::move(tmp);
  }
  return out;
}

const std::vector<Ridge>& Polytope::ridges() const {
  std::call_once(impl_->ridges_once, [this] {
    std::vector<Ridge> out;
    const long target = static_cast<long>(dim()) - 2;
    for (std::size_t i = 0; i < facets().size(); ++i)
      for (std::size_t j = i + 1; j < facets().size(); ++j) {
        auto common = common_vertices({i, j});
        if (static_cast<long>(common.size()) < target + 1) continue;
        std::vector<IntVector> pts;
        for (auto v : common) pts.push_back(vertices()[v]);
        if (affine_dimension(pts) == target) out.push_back(Ridge{i, j, std::move(common)});
      }
    impl_->ridges = std::move(out);
  });
  return impl_->ridges;
}

long Polytope::minimal_face_dimension(const std::vector<IntVector>& points) const {
  std::vector<std::size_t> fs;
  for (std::size_t i = 0; i < facets().size(); ++i) {
    bool all = true;
    for (const auto& p : points)
      if (!facets()[i].contains(p)) {
        all = false;
        break;
      }
    if (all) fs.push_back(i);
  }
  if (fs.empty()) return static_cast<long>(dim());
  std::vector<IntVector> pts;
  for (auto v : common_vertices(fs)) pts.push_back(vertices()[v]);
  return affine_dimension(pts);
}

bool Polytope::origin_in_interior() const {
  return std::all_of(facets().begin(), facets().end(),
                     [](const Facet& f) { return f.level > 0; });
}

bool Polytope::is_simplicial() const {
  return std::all_of(facets().begin(), facets().end(),
                     [d = dim()](const Facet& f) { return f.vertices.size() == d; });
}

bool Polytope::is_simplex() const { return vertices().size() == dim() + 1; }

bool Polytope::is_empty_polytope() const {
  return lattice_points().size() == vertices().size();
}

bool Polytope::is_centrally_symmetric() const {
  return std::all_of(vertices().begin(), vertices().end(),
                     [this](const IntVector& v) { return is_vertex(-v); });
}

Rational Polytope::max_step(const RationalPoint& x, const IntVector& dir) const {
  // <n, x + t dir> >= -c  <=>  t * <n, dir> >= -c - <n, x>.
  std::optional<Rational> best;
  for (const auto& f : facets()) {
    Integer nd = dot(f.normal, dir);
    if (nd >= 0) continue;
    Rational slack(dot(f.normal, x.num) + f.level * x.den, x.den);
    slack.canonicalize();
    Rational t = slack / Rational(-nd);
    if (!best || t < *best) best = t;
  }
  if (!best) fail(ErrorCode::NotFullDimensional, "unbounded ray in a polytope");
  return *best;
}

std::vector<IntVector> Polytope::facet_vertex_points(std::size_t f) const {
  std::vector<IntVector> out;
  for (auto v : facets()[f].vertices) out.push_back(vertices()[v]);
  return out;
}

std::string Polytope::to_string() const {
  std::string s = "conv{";
  for (std::size_t i = 0; i < vertices().size(); ++i) {
    if (i) s += ", ";
    s += format_vector(vertices()[i]);
  }
  return s + "}";
}

bool operator==(const Polytope& a, const Polytope& b) {
  return a.dim() == b.dim() && a.vertices() == b.vertices();
}

Polytope product(const Polytope& p1, const Polytope& p2) {
  std::vector<IntVector> pts;
  for (const auto& a : p1.vertices())
    for (const auto& b : p2.vertices()) {
      IntVector v = a;
      v.insert(v.end(), b.begin(), b.end());
      pts.push_back(std::move(v));
    }
  return Polytope::hull(pts);
}

Polytope free_sum(const Polytope& p1, const Polytope& p2) {
  std::vector<IntVector> pts;
  for (const auto& a : p1.vertices()) {
    IntVector v = a;
    v.resize(p1.dim() + p2.dim(), Integer(0));
    pts.push_back(std::move(v));
  }
  for (const auto& b : p2.vertices()) {
    IntVector v = zero_vector(p1.dim());
    v.insert(v.end(), b.begin(), b.end());
    pts.push_back(std::move(v));
  }
  return Polytope::hull(pts);
}

Polytope transform(const Polytope& p, const UnimodularMap& u) {
  std::vector<IntVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(u.apply(v));
  return Polytope::hull(pts);
}

namespace {

struct LocalHull {
  std::optional<Polytope> polytope;  // empty when all points coincide
  std::optional<UnimodularMap> to_local;
};

// Coordinates on the saturated lattice of the affine hull, based at points[0].
LocalHull local_hull(const std::vector<IntVector>& points) {
  const IntVector& base = points[0];
  std::vector<IntVector> diffs;
  for (const auto& p : points) diffs.push_back(p - base);
  auto [h, u] = hermite_normal_form(IntMatrix::from_columns(diffs));
  const std::size_t r = rank(h);
  if (r == 0) return {};
  std::vector<IntVector> local;
  for (const auto& q : diffs) {
    IntVector y = u.apply(q);
    y.resize(r);
    local.push_back(std::move(y));
  }
  return {Polytope::hull(local), u};
}

}  // namespace

std::vector<IntVector> hull_lattice_points(const std::vector<IntVector>& points) {
  if (points.empty()) return {};
  auto lh = local_hull(points);
  if (!lh.polytope) return {points[0]};
  const std::size_t d = points[0].size();
  auto back = lh.to_local->inverse();
  std::vector<IntVector> out;
  for (const auto& y : lh.polytope->lattice_points()) {
    IntVector full = y;
    full.resize(d, Integer(0));
    out.push_back(back.apply(full) + points[0]);
  }
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

bool is_empty_hull(const std::vector<IntVector>& points) {
  if (points.empty()) return true;
  auto lh = local_hull(points);
  return !lh.polytope || lh.polytope->is_empty_polytope();
}

std::vector<RationalPoint> rational_hull_vertices(const std::vector<RationalPoint>& points) {
  Integer l = 1;
  for (const auto& x : points) l = lcm(l, x.den);
  std::vector<IntVector> scaled;
  for (const auto& x : points) scaled.push_back(Integer(l / x.den) * x.num);
  std::vector<RationalPoint> out;
  const Polytope h = Polytope::hull(scaled);
  for (const auto& v : h.vertices()) out.emplace_back(v, l);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace reflex
