#include "reflex/normal_form.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

#include "reflex/error.hpp"

namespace reflex {

namespace {

// Invariants of a facet under lattice automorphisms fixing 0.
using FacetKey = std::tuple<Integer, std::size_t, std::size_t>;

FacetKey facet_key(const Polytope& p, std::size_t f) {
  const auto& fac = p.facets()[f];
  return {fac.level, fac.vertices.size(), p.facet_lattice_points(f).size()};
}

// A first basis vector and the vertices allowed after it.
struct Star {
  std::size_t first;
  std::vector<std::size_t> rest;
};

// Candidate bases start at a vertex v of a facet F in the least populated
// key class and continue with neighbours of v along edges of F. When some
// facet passes through 0 every ordered basis of vertices is a candidate.
std::vector<Star> candidate_stars(const Polytope& p) {
  const auto& fs = p.facets();
  const std::size_t n = p.vertices().size();
  std::vector<Star> stars;
  bool through_origin = std::any_of(fs.begin(), fs.end(), [](const Facet& f) { return f.level <= 0; });
  if (through_origin) {
    for (std::size_t v = 0; v < n; ++v) {
      Star s{v, {}};
      for (std::size_t w = 0; w < n; ++w)
        if (w != v) s.rest.push_back(w);
      stars.push_back(std::move(s));
    }
    return stars;
  }
  std::vector<FacetKey> keys;
  for (std::size_t f = 0; f < fs.size(); ++f) keys.push_back(facet_key(p, f));
  std::vector<FacetKey> distinct = keys;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const FacetKey* best = nullptr;
  std::size_t best_count = 0;
  for (const auto& k : distinct) {
    std::size_t c = static_cast<std::size_t>(std::count(keys.begin(), keys.end(), k));
    if (!best || c * std::get<1>(k) < best_count) {
      best = &k;
      best_count = c * std::get<1>(k);
    }
  }
  auto is_edge = [&](std::size_t u, std::size_t w) {
    std::vector<std::size_t> common;
    const auto& a = p.vertex_facets(u);
    const auto& b = p.vertex_facets(w);
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return !common.empty() && p.common_vertices(common).size() == 2;
  };
  std::vector<std::size_t> chosen;
  for (std::size_t f = 0; f < fs.size(); ++f)
    if (keys[f] == *best) chosen.push_back(f);
  // First vertices come from one class of (facet count, degree); the class
  // giving the fewest starts wins.
  std::vector<std::vector<std::size_t>> neighbours(n);
  std::vector<bool> seen(n, false);
  for (auto f : chosen)
    for (auto v : fs[f].vertices) {
      if (seen[v]) continue;
      seen[v] = true;
      for (std::size_t w = 0; w < n; ++w)
        if (w != v && is_edge(v, w)) neighbours[v].push_back(w);
    }
  using VertexKey = std::pair<std::size_t, std::size_t>;
  auto vertex_key = [&](std::size_t v) { return VertexKey{p.vertex_facets(v).size(), neighbours[v].size()}; };
  std::map<VertexKey, std::size_t> starts;
  for (auto f : chosen)
    for (auto v : fs[f].vertices) ++starts[vertex_key(v)];
  auto first_class = std::min_element(starts.begin(), starts.end(), [](const auto& a, const auto& b) {
                       return a.second < b.second;
                     })->first;
  for (auto f : chosen) {
    const auto& vs = fs[f].vertices;
    for (auto v : vs) {
      if (vertex_key(v) != first_class) continue;
      Star s{v, {}};
      for (auto w : neighbours[v])
        if (fs[f].contains(p.vertices()[w])) s.rest.push_back(w);
      stars.push_back(std::move(s));
    }
  }
  return stars;
}

// Arithmetic for the search, on machine words with overflow checks or on
// GMP integers.
struct Overflow {};

long add(long a, long b) {
  long r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}

long mul(long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

long floor_div(long a, long b) {
  long q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

// g = s*a + t*b with g = gcd(a, b) >= 0.
long gcdext(long a, long b, long& s, long& t) {
  long s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    long q = a / b;
    long r = a - q * b;
    a = b;
    b = r;
    long ns = s0 - q * s1, nt = t0 - q * t1;
    s0 = s1;
    s1 = ns;
    t0 = t1;
    t1 = nt;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return a;
}

Integer add(const Integer& a, const Integer& b) { return a + b; }
Integer mul(const Integer& a, const Integer& b) { return a * b; }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer gcdext(const Integer& a, const Integer& b, Integer& s, Integer& t) {
  Integer g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

template <class T>
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<T> a;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T(0)) {}
  T& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const T& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

template <class T>
void combine(Mat<T>& m, std::size_t r, std::size_t i, const T& s, const T& t, const T& ca, const T& cb) {
  for (std::size_t j = 0; j < m.cols; ++j) {
    T x = m.at(r, j), y = m.at(i, j);
    m.at(r, j) = add(mul(s, x), mul(t, y));
    m.at(i, j) = add(mul(ca, y), T(-mul(cb, x)));
  }
}

// Same convention as hermite_normal_form; u, when given, collects the row operations.
template <class T>
void hnf(Mat<T>& h, Mat<T>* u) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols && r < h.rows; ++c) {
    for (std::size_t i = r + 1; i < h.rows; ++i) {
      if (h.at(i, c) == 0) continue;
      if (h.at(r, c) == 0) {
        for (std::size_t j = 0; j < h.cols; ++j) std::swap(h.at(r, j), h.at(i, j));
        if (u)
          for (std::size_t j = 0; j < u->cols; ++j) std::swap(u->at(r, j), u->at(i, j));
        continue;
      }
      T s, t;
      T g = gcdext(h.at(r, c), h.at(i, c), s, t);
      T ca = h.at(r, c) / g, cb = h.at(i, c) / g;
      combine(h, r, i, s, t, ca, cb);
      if (u) combine(*u, r, i, s, t, ca, cb);
    }
    if (h.at(r, c) == 0) continue;
    if (h.at(r, c) < 0) {
      for (std::size_t j = 0; j < h.cols; ++j) h.at(r, j) = -h.at(r, j);
      if (u)
        for (std::size_t j = 0; j < u->cols; ++j) u->at(r, j) = -u->at(r, j);
    }
    for (std::size_t i = 0; i < r; ++i) {
      T q = floor_div(h.at(i, c), h.at(r, c));
      if (q == 0) continue;
      for (std::size_t j = 0; j < h.cols; ++j) h.at(i, j) = add(h.at(i, j), T(-mul(q, h.at(r, j))));
      if (u)
        for (std::size_t j = 0; j < u->cols; ++j) u->at(i, j) = add(u->at(i, j), T(-mul(q, u->at(r, j))));
    }
    ++r;
  }
}

// Column-major comparison of the first k columns.
template <class T>
int compare_prefix(const Mat<T>& a, const Mat<T>& b, std::size_t k) {
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (a.at(r, c) < b.at(r, c)) return -1;
      if (b.at(r, c) < a.at(r, c)) return 1;
    }
  return 0;
}

// Least HNF head over ordered bases from the pools, compared column by
// column, then least [head | U * rest sorted] row by row.
template <class T>
IntMatrix search(const Polytope& p, const std::vector<std::vector<T>>& vs) {
  const std::size_t d = p.dim();
  const std::size_t n = vs.size();
  auto basis_matrix = [&](const std::vector<std::size_t>& order) {
    Mat<T> m(d, order.size());
    for (std::size_t k = 0; k < order.size(); ++k)
      for (std::size_t r = 0; r < d; ++r) m.at(r, k) = vs[order[k]][r];
    return m;
  };

  // Level by level, keep the prefixes whose head prefix is least.
  struct Prefix {
    std::vector<std::size_t> order;
    const std::vector<std::size_t>* rest;
  };
  std::vector<Prefix> level;
  std::optional<Mat<T>> best_head;
  Mat<T> h(d, d);
  // Considers the prefix x.order + [i] (or x.order alone for i == n).
  auto offer = [&](std::vector<Prefix>& keep, const Prefix& x, std::size_t i) {
    const std::size_t k = x.order.size() + (i < n ? 1 : 0);
    h.cols = k;
    for (std::size_t c = 0; c < k; ++c) {
      const auto& v = vs[c < x.order.size() ? x.order[c] : i];
      for (std::size_t r = 0; r < d; ++r) h.at(r, c) = v[r];
    }
    hnf<T>(h, nullptr);
    if (h.at(k - 1, k - 1) == 0) return;
    int c = best_head ? compare_prefix(h, *best_head, k) : -1;
    if (c > 0) return;
    if (c < 0) {
      best_head = h;
      keep.clear();
    }
    keep.push_back(x);
    if (i < n) keep.back().order.push_back(i);
  };
  const auto stars = candidate_stars(p);
  for (const auto& star : stars) offer(level, Prefix{{star.first}, &star.rest}, n);
  for (std::size_t k = 1; k < d; ++k) {
    std::vector<Prefix> next;
    best_head.reset();
    for (const auto& x : level)
      for (auto i : *x.rest)
        if (std::find(x.order.begin(), x.order.end(), i) == x.order.end()) offer(next, x, i);
    level = std::move(next);
  }
  std::vector<std::vector<std::size_t>> tied;
  for (auto& x : level) tied.push_back(std::move(x.order));
  std::sort(tied.begin(), tied.end());
  tied.erase(std::unique(tied.begin(), tied.end()), tied.end());

  const std::size_t m = n - d;
  std::optional<std::vector<T>> best;  // row-major d x n
  std::vector<T> first(m), ys(m * d);
  std::vector<std::size_t> idx(m);
  std::vector<char> in_basis(n);
  for (const auto& basis : tied) {
    Mat<T> h = basis_matrix(basis);
    Mat<T> u(d, d);
    for (std::size_t i = 0; i < d; ++i) u.at(i, i) = 1;
    hnf<T>(h, &u);
    std::fill(in_basis.begin(), in_basis.end(), 0);
    for (auto i : basis) in_basis[i] = 1;
    // Sorted first coordinates are the first row of the rest.
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (in_basis[i]) continue;
      T y(0);
      for (std::size_t k = 0; k < d; ++k) y = add(y, mul(u.at(0, k), vs[i][k]));
      first[c++] = y;
    }
    std::sort(first.begin(), first.end());
    if (best && std::lexicographical_compare(best->begin() + static_cast<long>(d), best->begin() + static_cast<long>(n),
                                             first.begin(), first.end()))
      continue;
    c = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (in_basis[i]) continue;
      for (std::size_t r = 0; r < d; ++r) {
        T y(0);
        for (std::size_t k = 0; k < d; ++k) y = add(y, mul(u.at(r, k), vs[i][k]));
        ys[c * d + r] = y;
      }
      ++c;
    }
    for (std::size_t k = 0; k < m; ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(ys.begin() + static_cast<long>(a * d), ys.begin() + static_cast<long>(a * d + d),
                                          ys.begin() + static_cast<long>(b * d), ys.begin() + static_cast<long>(b * d + d));
    });
    std::vector<T> cand(d * n);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t k = 0; k < d; ++k) cand[r * n + k] = best_head->at(r, k);
      for (std::size_t k = 0; k < m; ++k) cand[r * n + d + k] = ys[idx[k] * d + r];
    }
    if (!best || cand < *best) best = std::move(cand);
  }
  IntMatrix out(d, n);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t k = 0; k < n; ++k) out(r, k) = (*best)[r * n + k];
  return out;
}

constexpr long kSmallLimit = 1L << 20;

IntMatrix small_normal_form(const Polytope& p) {
  std::vector<std::vector<long>> vs;
  for (const auto& v : p.vertices()) {
    std::vector<long> w;
    for (const auto& x : v) {
      if (abs(x) > kSmallLimit) throw Overflow{};
      w.push_back(x.get_si());
    }
    vs.push_back(std::move(w));
  }
  return search<long>(p, vs);
}

}  // namespace

std::string NormalForm::to_string() const { return matrix.to_string(); }

Polytope NormalForm::polytope() const {
  std::vector<IntVector> pts;
  for (std::size_t j = 0; j < matrix.cols(); ++j) pts.push_back(matrix.col(j));
  return Polytope::hull(pts);
}

NormalForm normal_form(const Polytope& p) {
  try {
    return NormalForm{small_normal_form(p)};
  } catch (const Overflow&) {
  }
  return exact_normal_form(p);
}

NormalForm exact_normal_form(const Polytope& p) {
  return NormalForm{search<Integer>(p, p.vertices())};
}

bool isomorphic(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) fail(ErrorCode::DimensionMismatch, "polytopes of different dimension");
  if (p.vertices().size() != q.vertices().size() || p.facets().size() != q.facets().size())
    return false;
  return normal_form(p) == normal_form(q);
}

}  // namespace reflex
