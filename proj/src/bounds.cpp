#include "reflex/bounds.hpp"

#include <algorithm>
#include <map>

#include "reflex/error.hpp"
#include "reflex/gallery.hpp"
#include "reflex/normal_form.hpp"

namespace reflex {

namespace {

void require_reflexive(const Polytope& p) {
  if (!is_fano(p) || !is_reflexive(p)) fail(ErrorCode::NotReflexive, p.to_string() + " is not reflexive");
}

Integer power(long base, std::size_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

std::string opt_str(const std::optional<Integer>& x) { return x ? x->get_str() : "n/a"; }

Rational pair(const std::vector<Rational>& row, const IntVector& m) {
  Rational s = 0;
  for (std::size_t j = 0; j < m.size(); ++j) s += row[j] * m[j];
  return s;
}

IntVector residue(const IntVector& x, unsigned k) {
  IntVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    mpz_fdiv_r_ui(r[i].get_mpz_t(), x[i].get_mpz_t(), k);
  return r;
}

// Facets sharing a ridge with facet f, keyed by the vertex of f they miss.
std::vector<std::size_t> ridge_partners(const Polytope& p, std::size_t f) {
  std::vector<std::size_t> out;
  for (const auto& r : p.ridges()) {
    if (r.first == f) out.push_back(r.second);
    if (r.second == f) out.push_back(r.first);
  }
  return out;
}

bool share_facet(const Polytope& p, const IntVector& x, const IntVector& y) {
  for (const auto& f : p.facets())
    if (f.contains(x) && f.contains(y)) return true;
  return false;
}

}  // namespace

bool VertexBounds::all_pass() const {
  Integer n = static_cast<unsigned long>(vertices);
  if (n > coarse || n > second) return false;
  for (const auto* b : {&large_alpha, &small_alpha, &simplicial})
    if (*b && n > **b) return false;
  return true;
}

Report VertexBounds::to_report() const {
  Report r;
  r.set("bounds.vertices", std::to_string(vertices));
  r.set("bounds.alpha", std::to_string(alpha));
  r.set("bounds.beta", std::to_string(beta));
  r.set("bounds.coarse", coarse.get_str());
  r.set("bounds.large_alpha", opt_str(large_alpha));
  r.set("bounds.small_alpha", opt_str(small_alpha));
  r.set("bounds.simplicial", opt_str(simplicial));
  r.set("bounds.second", second.get_str());
  r.set_bool("bounds.ok", all_pass());
  return r;
}

VertexBounds vertex_bounds(const Polytope& p) {
  require_reflexive(p);
  VertexBounds b;
  b.dim = p.dim();
  b.vertices = p.vertices().size();
  std::vector<std::size_t> ridge_count(p.facets().size(), 0);
  for (const auto& r : p.ridges()) {
    ++ridge_count[r.first];
    ++ridge_count[r.second];
  }
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    b.alpha = std::max(b.alpha, p.facets()[f].vertices.size());
    b.beta = std::max(b.beta, ridge_count[f]);
  }
  const long d = static_cast<long>(b.dim);
  const long a = static_cast<long>(b.alpha);
  const long be = static_cast<long>(b.beta);
  b.coarse = Integer(2 * d * a);
  if (a >= 2 * d - 3) b.large_alpha = Integer(2 * d * (a - d + 2) - 2);
  if (a <= 2 * d - 3) b.small_alpha = Integer(d * a + a - d + 1);
  if (p.is_simplicial() && d >= 3) b.simplicial = Integer(d * d + 1);
  // floor(A + 2 sqrt(X)) = A + floor(sqrt(4X)) for integral A.
  Integer big_a = Integer(a - d + 1) * be + 2;
  Integer x = Integer(a - 1) * (d + 1) * (Integer(a - 1) + Integer(a - d + 1) * be);
  b.second = big_a + isqrt(4 * x);
  return b;
}

Report FundCheck::to_report() const {
  Report r;
  r.set("fund.facet", std::to_string(facet));
  r.set_bool("fund.covered", covered);
  r.set_bool("fund.normals", normals);
  r.set_bool("fund.part1", part1);
  r.set_bool("fund.part2", part2);
  r.set_bool("fund.part3", part3);
  r.set_bool("fund.part3.applies", part3_applies);
  if (!witness.empty()) r.set("fund.witness", witness);
  return r;
}

std::optional<IntVector> fund_coverage_violation(const Polytope& p, std::size_t facet) {
  require_reflexive(p);
  const auto& fs = p.facets();
  const auto partners = ridge_partners(p, facet);
  for (const auto& m : p.boundary_lattice_points()) {
    if (dot(fs[facet].normal, m) != 0) continue;
    bool found = std::any_of(partners.begin(), partners.end(),
                             [&](std::size_t g) { return fs[g].contains(m); });
    if (!found) return m;
  }
  return std::nullopt;
}

FundCheck lemma_fund_check(const Polytope& p, std::size_t facet) {
  require_reflexive(p);
  const std::size_t d = p.dim();
  const auto& fs = p.facets();
  if (facet >= fs.size()) fail(ErrorCode::NotSimplexFacet, "facet index out of range");
  const Facet& F = fs[facet];
  if (F.vertices.size() != d) fail(ErrorCode::NotSimplexFacet, "facet " + std::to_string(facet) + " is not a simplex");

  FundCheck c;
  c.facet = facet;
  c.simplex = true;
  auto note = [&](const std::string& s) {
    if (c.witness.empty()) c.witness = s;
  };
  c.covered = true;
  if (auto m = fund_coverage_violation(p, facet)) {
    c.covered = false;
    note("uncovered " + format_vector(*m));
  }

  std::vector<IntVector> e;
  for (auto i : F.vertices) e.push_back(p.vertices()[i]);
  const IntMatrix emat = IntMatrix::from_columns(e);
  const auto einv = rational_inverse(emat);  // row i is e_i*
  const IntVector& u = F.normal;            // level 1

  // F_i shares every vertex of F except e_i.
  std::vector<std::size_t> fi(d);
  const auto partners = ridge_partners(p, facet);
  for (std::size_t i = 0; i < d; ++i) {
    bool found = false;
    for (auto g : partners) {
      if (!fs[g].contains(e[i]) && std::all_of(e.begin(), e.end(), [&](const IntVector& x) {
            return x == e[i] || fs[g].contains(x);
          })) {
        fi[i] = g;
        found = true;
        break;
      }
    }
    if (!found) fail(ErrorCode::NotSimplexFacet, "no neighbouring facet opposite " + format_vector(e[i]));
  }

  c.normals = true;
  std::size_t admissible = 0;
  for (std::size_t i = 0; i < d; ++i) {
    const Facet& G = fs[fi[i]];
    bool adm = false;
    for (const auto& m : p.facet_lattice_points(fi[i])) {
      if (F.contains(m)) continue;
      Rational em = pair(einv[i], m);
      Rational alpha = (-1 - Rational(dot(u, m))) / em;
      bool ok = alpha > 0;
      for (std::size_t j = 0; j < d && ok; ++j) ok = Rational(G.normal[j]) == u[j] + alpha * einv[i][j];
      if (!ok) {
        c.normals = false;
        note("eta mismatch via " + format_vector(m));
      }
      if (dot(u, m) == 0 && em == -1) adm = true;
    }
    if (adm) ++admissible;
  }

  c.part1 = true;
  c.part2 = true;
  for (const auto& m : p.boundary_lattice_points()) {
    if (dot(u, m) != 0) continue;
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < d; ++i) {
      bool in = fs[fi[i]].contains(m);
      if (in) on.push_back(i);
      if ((!in) != (pair(einv[i], m) >= 0)) {
        c.part1 = false;
        note("part1 fails at " + format_vector(m));
      }
    }
    if (on.size() == 1 && share_facet(p, m, e[on[0]])) {
      c.part2 = false;
      note("part2 fails at " + format_vector(m));
    }
  }

  c.part3_applies = admissible + 1 >= d;
  c.part3 = !c.part3_applies || abs(determinant(emat)) == 1;
  if (!c.part3) note("facet vertices not a basis");
  return c;
}

Report ModKReport::to_report() const {
  Report r;
  r.set("modk.k", std::to_string(k));
  r.set("modk.size", std::to_string(size));
  r.set("modk.fibers", std::to_string(fibers.size()));
  std::size_t largest = 0;
  for (const auto& f : fibers) largest = std::max(largest, f.size());
  r.set("modk.largest_fiber", std::to_string(largest));
  r.set_bool("modk.injective", injective);
  r.set_bool("modk.hypothesis", hypothesis);
  r.set("modk.symmetric_pairs", std::to_string(symmetric_pairs));
  r.set_bool("modk.asserted", asserted);
  if (asserted) {
    r.set_bool("modk.zero_fiber_empty", zero_fiber_empty);
    r.set_bool("modk.fibers_ok", fibers_ok);
    r.set_bool("modk.size_bound", size_bound);
    r.set_bool("modk.pair_bound", pair_bound);
  }
  if (!witness.empty()) r.set("modk.witness", witness);
  return r;
}

ModKReport mod_k_analysis(const Polytope& p, unsigned k, const std::vector<IntVector>& b) {
  if (b.empty()) fail(ErrorCode::NotBoundary, "empty point set");
  if (k == 0) fail(ErrorCode::ZeroVector, "modulus must be positive");
  for (const auto& x : b)
    if (!p.on_boundary(x)) fail(ErrorCode::NotBoundary, format_vector(x) + " is not on the boundary");
  std::vector<IntVector> pts = b;
  std::sort(pts.begin(), pts.end(), LexLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  ModKReport r;
  r.k = k;
  r.size = pts.size();
  std::map<IntVector, std::vector<IntVector>, LexLess> fib;
  for (const auto& x : pts) fib[residue(x, k)].push_back(x);
  for (auto& [res, f] : fib) r.fibers.push_back(f);
  r.injective = fib.size() == pts.size();

  r.hypothesis = true;
  for (std::size_t i = 0; i < pts.size() && r.hypothesis; ++i)
    for (std::size_t j = i + 1; j < pts.size() && r.hypothesis; ++j)
      if (segment_lattice_count(pts[i], pts[j]) != 2 && share_facet(p, pts[i], pts[j])) {
        r.hypothesis = false;
        r.witness = "segment " + format_vector(pts[i]) + " " + format_vector(pts[j]);
      }

  for (const auto& x : pts)
    if (std::binary_search(pts.begin(), pts.end(), -x, LexLess{})) ++r.symmetric_pairs;
  r.symmetric_pairs /= 2;

  const std::size_t d = p.dim();
  r.asserted = k == 2 && r.hypothesis && p.origin_in_interior() && is_canonical(p);
  r.zero_fiber_empty = !fib.count(zero_vector(d));
  r.fibers_ok = std::all_of(r.fibers.begin(), r.fibers.end(), [](const std::vector<IntVector>& f) {
    return f.size() == 1 || (f.size() == 2 && f[0] == -f[1]);
  });
  r.size_bound = Integer(static_cast<unsigned long>(r.size)) <= power(2, d + 1) - 2;
  r.pair_bound = Integer(static_cast<unsigned long>(r.symmetric_pairs)) >=
                 Integer(static_cast<unsigned long>(r.size)) + 1 - power(2, d);
  if (r.asserted && !r.all_pass() && r.witness.empty()) r.witness = "mod 2 bound violated";
  return r;
}

bool CentralReport::all_pass() const {
  if (!injective) return false;
  if (Integer(static_cast<unsigned long>(points)) > bound) return false;
  if (Integer(static_cast<unsigned long>(max_facet_points)) > facet_bound) return false;
  if (reflexive && (equality != all_facets_full || equality != is_cube)) return false;
  return true;
}

Report CentralReport::to_report() const {
  Report r;
  r.set("central.points", std::to_string(points));
  r.set("central.bound", bound.get_str());
  r.set_bool("central.injective", injective);
  r.set("central.max_facet_points", std::to_string(max_facet_points));
  r.set("central.facet_bound", facet_bound.get_str());
  r.set_bool("central.equality", equality);
  r.set_bool("central.cube", is_cube);
  r.set_bool("central.ok", all_pass());
  return r;
}

CentralReport central_bound_check(const Polytope& p) {
  if (!p.is_centrally_symmetric()) fail(ErrorCode::NotCentrallySymmetric, p.to_string());
  if (!is_fano(p) || !is_canonical(p)) fail(ErrorCode::NotCanonical, p.to_string() + " is not a canonical Fano polytope");
  const std::size_t d = p.dim();
  CentralReport c;
  const auto& pts = p.lattice_points();
  c.points = pts.size();
  c.bound = power(3, d);
  std::vector<IntVector> res;
  for (const auto& x : pts) res.push_back(residue(x, 3));
  std::sort(res.begin(), res.end(), LexLess{});
  c.injective = std::adjacent_find(res.begin(), res.end()) == res.end();
  c.facet_bound = power(3, d - 1);
  c.all_facets_full = true;
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    std::size_t n = p.facet_lattice_points(f).size();
    c.max_facet_points = std::max(c.max_facet_points, n);
    if (Integer(static_cast<unsigned long>(n)) != c.facet_bound) c.all_facets_full = false;
  }
  c.equality = Integer(static_cast<unsigned long>(c.points)) == c.bound;
  c.reflexive = is_reflexive(p);
  if (d < 64 && p.vertices().size() == (std::size_t{1} << d) && p.facets().size() == 2 * d)
    c.is_cube = normal_form(p) == normal_form(cube(d));
  return c;
}

bool facet_characterization_3d(const Polytope& p) {
  if (p.dim() != 3) fail(ErrorCode::WrongDimension, "facet characterization needs d = 3");
  require_reflexive(p);
  const auto& vs = p.vertices();
  for (const auto& f : p.facets()) {
    std::vector<IntVector> e;
    for (auto i : f.vertices) e.push_back(vs[i]);
    if (e.size() == 3) {
      if (abs(determinant(IntMatrix::from_columns(e))) != 1) return false;
      continue;
    }
    if (e.size() != 4) return false;
    // Diagonals {v,x}, {w,y} with v + x = w + y.
    bool ok = false;
    for (std::size_t j = 1; j < 4 && !ok; ++j) {
      std::vector<std::size_t> rest;
      for (std::size_t t = 1; t < 4; ++t)
        if (t != j) rest.push_back(t);
      if (e[0] + e[j] != e[rest[0]] + e[rest[1]]) continue;
      ok = abs(determinant(IntMatrix::from_columns({e[0], e[j], e[rest[0]]}))) == 1;
    }
    if (!ok) return false;
  }
  return true;
}

Report ConjectureReport::to_report() const {
  Report r;
  auto opt = [&](const std::string& key, const std::optional<bool>& b) {
    if (b) r.set_bool(key, *b);
  };
  r.set("conj.vertices", std::to_string(vertices));
  r.set_bool("conj.vertconj", vertconj);
  r.set_bool("conj.vertconj.equality", vertconj_equality);
  opt("conj.vertconj.type", vertconj_type);
  if (mainconj_bound) {
    r.set("conj.mainconj.bound", std::to_string(*mainconj_bound));
    opt("conj.mainconj", mainconj);
    opt("conj.mainconj.equality", mainconj_equality);
    opt("conj.mainconj.type", mainconj_type);
  }
  return r;
}

ConjectureReport conjecture_check(const Polytope& p) {
  require_reflexive(p);
  ConjectureReport c;
  c.dim = p.dim();
  c.vertices = p.vertices().size();
  const Integer n = static_cast<unsigned long>(c.vertices);
  c.vertconj = n * n <= power(6, c.dim);
  c.vertconj_equality = n * n == power(6, c.dim);
  if (c.vertconj_equality && c.dim % 2 == 0) c.vertconj_type = isomorphic(p, hexagon_power(c.dim / 2));
  c.simplicial = p.is_simplicial();
  if (c.simplicial) {
    c.mainconj_bound = c.dim % 2 == 0 ? 3 * c.dim : 3 * c.dim - 1;
    c.mainconj = c.vertices <= *c.mainconj_bound;
    c.mainconj_equality = c.vertices == *c.mainconj_bound;
    if (*c.mainconj_equality && c.dim % 2 == 0)
      c.mainconj_type = isomorphic(reflexive_dual(p), hexagon_power(c.dim / 2));
  }
  return c;
}

Report SymmetricSimplicialReport::to_report() const {
  Report r;
  r.set_bool("symm.hypothesis", hypothesis);
  r.set_bool("symm.centrally_symmetric", centrally_symmetric);
  r.set("symm.vertices", std::to_string(vertices));
  r.set("symm.bound", std::to_string(bound));
  r.set_bool("symm.bound_ok", bound_ok);
  r.set_bool("symm.equality", equality);
  if (type) {
    r.set_bool("symm.type", *type);
    r.set("symm.type_name", type_name);
  }
  return r;
}

SymmetricSimplicialReport symmetric_simplicial_check(const Polytope& p) {
  if (!p.is_simplicial()) fail(ErrorCode::NotSimplicial, p.to_string());
  require_reflexive(p);
  SymmetricSimplicialReport s;
  const std::size_t d = p.dim();
  s.dim = d;
  s.vertices = p.vertices().size();
  s.centrally_symmetric = p.is_centrally_symmetric();
  const Polytope q = reflexive_dual(p);
  s.hypothesis = std::any_of(q.vertices().begin(), q.vertices().end(),
                             [&](const IntVector& u) { return q.contains(-u); });
  s.bound = d % 2 == 0 ? 3 * d : 3 * d - 1;
  s.bound_ok = s.vertices <= s.bound;
  s.equality = s.vertices == s.bound;
  if (s.hypothesis && s.equality) {
    if (d % 2 == 0) {
      s.type_name = "dual of hexagon^" + std::to_string(d / 2);
      s.type = isomorphic(q, hexagon_power(d / 2));
    } else if (s.centrally_symmetric) {
      s.type_name = d == 1 ? "dual of [-1,1]" : "dual of [-1,1] x hexagon^" + std::to_string((d - 1) / 2);
      s.type = isomorphic(q, d == 1 ? cube(1) : product(cube(1), hexagon_power((d - 1) / 2)));
    }
  }
  return s;
}

}  // namespace reflex
