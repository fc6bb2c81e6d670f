#include "reflex/cone.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>

#include "reflex/error.hpp"

namespace reflex {

namespace {

struct Ray {
  IntVector dir;
  boost::dynamic_bitset<> zeros;  // tight constraints among those processed
};

}  // namespace

std::vector<IntVector> extreme_rays(const std::vector<IntVector>& input) {
  if (input.empty()) fail(ErrorCode::NotFullDimensional, "no constraints");
  const std::size_t k = input[0].size();

  std::vector<IntVector> cons;
  for (const auto& c : input) {
    if (c.size() != k) fail(ErrorCode::DimensionMismatch, "constraint length");
    if (is_zero(c)) continue;
    IntVector p = primitivize(c).first;
    if (std::find(cons.begin(), cons.end(), p) == cons.end()) cons.push_back(std::move(p));
  }
  const std::size_t m = cons.size();

  // Greedy choice of k independent constraints.
  std::vector<std::size_t> basis;
  std::vector<IntVector> basis_rows;
  for (std::size_t i = 0; i < m && basis.size() < k; ++i) {
    basis_rows.push_back(cons[i]);
    if (rank(basis_rows) == basis_rows.size()) {
      basis.push_back(i);
    } else {
      basis_rows.pop_back();
    }
  }
  if (basis.size() < k) fail(ErrorCode::NotFullDimensional, "constraints do not span the space");

  auto inv = rational_inverse(IntMatrix::from_rows(basis_rows));
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rational> col(k);
    for (std::size_t i = 0; i < k; ++i) col[i] = inv[i][j];
    RationalPoint rp = RationalPoint::from_coords(col);
    Ray r{primitivize(rp.num).first, boost::dynamic_bitset<>(m)};
    for (std::size_t i = 0; i < k; ++i)
      if (i != j) r.zeros.set(basis[i]);
    rays.push_back(std::move(r));
  }

  std::vector<bool> in_basis(m, false);
  for (auto i : basis) in_basis[i] = true;

  for (std::size_t h = 0; h < m; ++h) {
    if (in_basis[h]) continue;
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(cons[h], rays[r].dir);
      if (val[r] > 0) pos.push_back(r);
      else if (val[r] < 0) neg.push_back(r);
      else rays[r].zeros.set(h);
    }
    if (neg.empty()) continue;

    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (val[r] >= 0) next.push_back(rays[r]);

    for (auto p : pos) {
      for (auto n : neg) {
        boost::dynamic_bitset<> common = rays[p].zeros & rays[n].zeros;
        if (common.count() + 2 < k) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector dir = val[p] * rays[n].dir - val[n] * rays[p].dir;
        Ray nr{primitivize(dir).first, common};
        nr.zeros.set(h);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }

  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.dir));
  std::sort(out.begin(), out.end(), LexLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RationalPoint> vertices_of_inequalities(const std::vector<IntVector>& normals,
                                                    const std::vector<Integer>& levels) {
  if (normals.empty()) fail(ErrorCode::NotFullDimensional, "no inequalities");
  const std::size_t d = normals[0].size();
  // Homogenize: level * t + <normal, x> >= 0 together with t >= 0.
  std::vector<IntVector> cons;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    IntVector c(d + 1);
    c[0] = levels[i];
    for (std::size_t j = 0; j < d; ++j) c[j + 1] = normals[i][j];
    cons.push_back(std::move(c));
  }
  cons.push_back(unit_vector(d + 1, 0));
  std::vector<RationalPoint> verts;
  for (const auto& ray : extreme_rays(cons)) {
    if (ray[0] == 0) fail(ErrorCode::NotFullDimensional, "inequalities define an unbounded set");
    verts.emplace_back(IntVector(ray.begin() + 1, ray.end()), ray[0]);
  }
  std::sort(verts.begin(), verts.end());
  return verts;
}

}  // namespace reflex
