#pragma once

// Shared helpers and independent oracles for the tests.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "reflex/lattice.hpp"
#include "reflex/polytope.hpp"

namespace testing {

using namespace reflex;

using reflex::Integer;
using reflex::IntMatrix;
using reflex::IntVector;
using reflex::Rational;

inline std::vector<IntVector> pts(std::initializer_list<std::initializer_list<long>> list) {
  std::vector<IntVector> out;
  for (const auto& p : list) out.push_back(reflex::make_vector(p));
  return out;
}

inline IntVector vec(std::initializer_list<long> v) { return reflex::make_vector(v); }

/// Product of random elementary moves, swaps and sign flips.
inline IntMatrix random_unimodular(std::size_t d, std::mt19937& rng, int moves = 12) {
  IntMatrix m = IntMatrix::identity(d);
  if (d == 1) {
    if (rng() & 1) m(0, 0) = -1;
    return m;
  }
  std::uniform_int_distribution<std::size_t> idx(0, d - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int k = 0; k < moves; ++k) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) {
      for (std::size_t c = 0; c < d; ++c) m(i, c) = -m(i, c);
      continue;
    }
    if (rng() % 4 == 0) {
      for (std::size_t c = 0; c < d; ++c) std::swap(m(i, c), m(j, c));
      continue;
    }
    int a = coef(rng);
    for (std::size_t c = 0; c < d; ++c) m(i, c) += a * m(j, c);
  }
  return m;
}

inline std::vector<IntVector> map_points(const IntMatrix& u, const std::vector<IntVector>& points) {
  std::vector<IntVector> out;
  for (const auto& p : points) out.push_back(u * p);
  return out;
}

/// Facet inequalities <n, x> >= -c by brute force over d-subsets of the
/// points: a hyperplane through d affinely independent points with every
/// point on one side and the point set spanning it.
struct Halfspace {
  IntVector normal;
  Integer level;
  bool operator==(const Halfspace& o) const { return normal == o.normal && level == o.level; }
  bool operator<(const Halfspace& o) const {
    if (level != o.level) return level < o.level;
    return reflex::lex_compare(normal, o.normal) < 0;
  }
};

inline std::vector<Halfspace> brute_force_facets(const std::vector<IntVector>& points) {
  const std::size_t d = points[0].size();
  const std::size_t n = points.size();
  std::vector<Halfspace> out;
  std::vector<std::size_t> idx(d);
  // Enumerate d-subsets.
  std::vector<bool> pick(n, false);
  std::fill(pick.end() - static_cast<long>(d), pick.end(), true);
  do {
    std::vector<IntVector> sel;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) sel.push_back(points[i]);
    // Normal: kernel of the (d-1) x d difference matrix via cofactors.
    IntMatrix diff(d - 1, d);
    for (std::size_t r = 0; r + 1 < d; ++r)
      for (std::size_t c = 0; c < d; ++c) diff(r, c) = sel[r + 1][c] - sel[0][c];
    IntVector normal(d);
    for (std::size_t c = 0; c < d; ++c) {
      IntMatrix minor(d - 1, d - 1);
      for (std::size_t r = 0; r + 1 < d; ++r)
        for (std::size_t cc = 0, k = 0; cc < d; ++cc)
          if (cc != c) minor(r, k++) = diff(r, cc);
      Integer det = d == 1 ? Integer(1) : reflex::determinant(minor);
      normal[c] = (c % 2 == 0) ? det : Integer(-det);
    }
    if (reflex::is_zero(normal)) continue;
    normal = reflex::primitivize(normal).first;
    Integer value = reflex::dot(normal, sel[0]);
    bool pos = false, neg = false;
    for (const auto& p : points) {
      Integer s = reflex::dot(normal, p) - value;
      if (s > 0) pos = true;
      if (s < 0) neg = true;
    }
    if (pos && neg) continue;
    if (neg) {
      normal = -normal;
      value = -value;
    }
    // Face must be (d-1)-dimensional.
    std::vector<IntVector> on;
    for (const auto& p : points)
      if (reflex::dot(normal, p) == value) on.push_back(p);
    if (reflex::affine_dimension(on) != static_cast<long>(d) - 1) continue;
    out.push_back({normal, -value});
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Lattice points of the bounding box satisfying every inequality.
inline std::vector<IntVector> box_scan(const std::vector<IntVector>& points, const std::vector<Halfspace>& hs) {
  const std::size_t d = points[0].size();
  IntVector lo = points[0], hi = points[0];
  for (const auto& p : points)
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  std::vector<IntVector> out;
  IntVector x = lo;
  while (true) {
    bool in = std::all_of(hs.begin(), hs.end(),
                          [&](const Halfspace& h) { return reflex::dot(h.normal, x) + h.level >= 0; });
    if (in) out.push_back(x);
    std::size_t i = 0;
    while (i < d && x[i] == hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i == d) break;
    ++x[i];
  }
  std::sort(out.begin(), out.end(), reflex::LexLess{});
  return out;
}

/// Lattice points by recursive slicing on the last coordinate. Each partial
/// assignment is pruned when some inequality fails on the whole remaining box.
inline std::vector<IntVector> slice_points(const std::vector<IntVector>& points,
                                           const std::vector<Halfspace>& hs) {
  const std::size_t d = points[0].size();
  IntVector lo = points[0], hi = points[0];
  for (const auto& p : points)
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  std::vector<IntVector> out;
  IntVector x = lo;
  // free: coordinates [0, free) are still unassigned.
  auto feasible = [&](std::size_t free) {
    for (const auto& h : hs) {
      Integer best = h.level;
      for (std::size_t i = 0; i < d; ++i) {
        if (i < free) best += h.normal[i] > 0 ? h.normal[i] * hi[i] : h.normal[i] * lo[i];
        else best += h.normal[i] * x[i];
      }
      if (best < 0) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t free) -> void {
    if (!feasible(free)) return;
    if (free == 0) {
      out.push_back(x);
      return;
    }
    const std::size_t k = free - 1;
    for (x[k] = lo[k]; x[k] <= hi[k]; ++x[k]) self(self, k);
    x[k] = lo[k];
  };
  rec(rec, d);
  std::sort(out.begin(), out.end(), reflex::LexLess{});
  return out;
}

/// Unimodular U with U(V(P)) = V(Q) by trying every image of one basis.
inline bool brute_force_isomorphic(const reflex::Polytope& p, const reflex::Polytope& q) {
  if (p.dim() != q.dim() || p.vertices().size() != q.vertices().size()) return false;
  const std::size_t d = p.dim();
  const auto& vp = p.vertices();
  const auto& vq = q.vertices();
  // Greedy basis among the vertices of P.
  std::vector<std::size_t> basis;
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < vp.size() && basis.size() < d; ++i) {
    rows.push_back(vp[i]);
    if (reflex::rank(rows) == rows.size()) basis.push_back(i);
    else rows.pop_back();
  }
  const auto binv = reflex::rational_inverse(IntMatrix::from_columns(rows));
  std::vector<IntVector> sorted_q = vq;
  std::sort(sorted_q.begin(), sorted_q.end(), reflex::LexLess{});
  std::vector<std::size_t> choice(d, 0);
  while (true) {
    bool distinct = true;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b) distinct = distinct && choice[a] != choice[b];
    if (distinct) {
      // U = C B^-1 must be integral.
      IntMatrix u(d, d);
      bool integral = true;
      for (std::size_t r = 0; r < d && integral; ++r)
        for (std::size_t c = 0; c < d && integral; ++c) {
          Rational s = 0;
          for (std::size_t k = 0; k < d; ++k) s += Rational(vq[choice[k]][r]) * binv[k][c];
          if (s.get_den() != 1) integral = false;
          else u(r, c) = s.get_num();
        }
      if (integral && abs(reflex::determinant(u)) == 1) {
        std::vector<IntVector> img = map_points(u, vp);
        std::sort(img.begin(), img.end(), reflex::LexLess{});
        if (img == sorted_q) return true;
      }
    }
    std::size_t i = 0;
    while (i < d && ++choice[i] == vq.size()) choice[i++] = 0;
    if (i == d) return false;
  }
}

/// Least level of a non-generator lattice point in a facet cone, minus one,
/// scanning the box [-2R, 2R]^d.
inline Rational discrepancy_oracle(const Polytope& p) {
  auto hs = brute_force_facets(p.vertices());
  const std::size_t d = p.dim();
  Integer r = 0;
  for (const auto& v : p.vertices())
    for (const auto& c : v) r = std::max(r, Integer(abs(c)));
  r *= 2;
  std::optional<Rational> best;
  for (const auto& f : hs) {
    IntVector x(d, Integer(-r));
    while (true) {
      Rational level(-dot(f.normal, x), f.level);
      level.canonicalize();
      // x / level lies in P exactly when x is in cone(F).
      bool in_cone = level > 0 && std::all_of(hs.begin(), hs.end(), [&](const Halfspace& g) {
        return Rational(dot(g.normal, x)) + Rational(g.level) * level >= 0;
      });
      bool generator = level == 1 && p.is_vertex(x);
      if (in_cone && !generator && level <= 2 && (!best || level < *best)) best = level;
      std::size_t i = 0;
      while (i < d && x[i] == r) x[i++] = -r;
      if (i == d) break;
      ++x[i];
    }
  }
  return *best - 1;
}

}  // namespace testing
