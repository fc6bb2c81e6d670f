#include "reflex/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "reflex/error.hpp"

namespace reflex {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::NotFano: return "NotFano";
    case ErrorCode::NotReflexive: return "NotReflexive";
    case ErrorCode::NotOnBoundary: return "NotOnBoundary";
    case ErrorCode::NotVertex: return "NotVertex";
    case ErrorCode::NotBoundary: return "NotBoundary";
    case ErrorCode::WrongClass: return "WrongClass";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::NotSimplexFacet: return "NotSimplexFacet";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::NotCentrallySymmetric: return "NotCentrallySymmetric";
    case ErrorCode::NotCanonical: return "NotCanonical";
    case ErrorCode::NotLattice: return "NotLattice";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

IntVector make_vector(std::initializer_list<long> coords) {
  IntVector v;
  v.reserve(coords.size());
  for (long c : coords) v.emplace_back(c);
  return v;
}

IntVector zero_vector(std::size_t d) { return IntVector(d, Integer(0)); }

IntVector unit_vector(std::size_t d, std::size_t i) {
  IntVector v = zero_vector(d);
  v[i] = 1;
  return v;
}

static void require_same_dim(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size())
    fail(ErrorCode::DimensionMismatch,
         std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

Integer dot(const IntVector& a, const IntVector& b) {
  require_same_dim(a, b);
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  require_same_dim(a, b);
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  require_same_dim(a, b);
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector operator-(const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IntVector operator*(const Integer& s, const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

std::strong_ordering lex_compare(const IntVector& a, const IntVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

bool graded_lex_less(const IntVector& a, const IntVector& b) {
  Integer sa = 0, sb = 0;
  for (const auto& x : a) sa += x;
  for (const auto& x : b) sb += x;
  if (sa != sb) return sa < sb;
  return lex_compare(a, b) < 0;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

std::pair<IntVector, Integer> primitivize(const IntVector& v) {
  Integer g = content(v);
  if (g == 0) fail(ErrorCode::ZeroVector, "cannot primitivize the zero vector");
  IntVector p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    mpz_divexact(p[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return {std::move(p), std::move(g)};
}

bool is_primitive(const IntVector& v) { return content(v) == 1; }

Integer segment_lattice_count(const IntVector& a, const IntVector& b) {
  return content(b - a) + 1;
}

std::string format_vector(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

RationalPoint::RationalPoint(IntVector n, Integer d) : num(std::move(n)), den(std::move(d)) {
  if (den == 0) fail(ErrorCode::ZeroVector, "zero denominator");
  if (den < 0) {
    den = -den;
    for (auto& x : num) x = -x;
  }
  Integer g = content(num);
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den.get_mpz_t());
  if (g > 1) {
    for (auto& x : num) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  }
}

std::vector<Rational> RationalPoint::coords() const {
  std::vector<Rational> q(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) {
    q[i] = Rational(num[i], den);
    q[i].canonicalize();
  }
  return q;
}

RationalPoint RationalPoint::from_coords(std::span<const Rational> q) {
  Integer den = 1;
  for (const auto& x : q) den = lcm(den, x.get_den());
  IntVector num(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) num[i] = q[i].get_num() * (den / q[i].get_den());
  return RationalPoint(std::move(num), std::move(den));
}

bool operator<(const RationalPoint& a, const RationalPoint& b) {
  // Compare coordinatewise as rationals.
  for (std::size_t i = 0; i < std::min(a.dim(), b.dim()); ++i) {
    int c = cmp(a.num[i] * b.den, b.num[i] * a.den);
    if (c) return c < 0;
  }
  return a.dim() < b.dim();
}

std::string format_point(const RationalPoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) s += ",";
    Rational q(p.num[i], p.den);
    q.canonicalize();
    s += q.get_str();
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) fail(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols) {
  return from_rows(cols).transpose();
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> r;
  for (auto row : rows) r.push_back(make_vector(row));
  return from_rows(r);
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::submatrix_rows(std::size_t first, std::size_t count) const {
  IntMatrix m(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
  return m;
}

IntMatrix IntMatrix::submatrix_cols(std::size_t first, std::size_t count) const {
  IntMatrix m(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (cols_ != v.size()) fail(ErrorCode::DimensionMismatch, "matrix-vector shape");
  IntVector r(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

std::strong_ordering compare(const IntMatrix& a, const IntMatrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  return lex_compare(a.data_, b.data_);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Integer determinant(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) fail(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& a) {
  // Fraction-free elimination.
  IntMatrix m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Integer f = m(i, c), g = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) * g - m(r, j) * f;
      // keep entries small
      IntVector row = m.row(i);
      Integer ct = content(row);
      if (ct > 1)
        for (std::size_t j = c; j < m.cols(); ++j)
          mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), ct.get_mpz_t());
    }
    ++r;
  }
  return r;
}

std::size_t rank(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 0;
  return rank(IntMatrix::from_rows(rows));
}

long affine_dimension(const std::vector<IntVector>& points) {
  if (points.empty()) return -1;
  std::vector<IntVector> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return static_cast<long>(rank(diffs));
}

std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) fail(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) fail(ErrorCode::NotLattice, "singular matrix");
    std::swap(m[p], m[c]);
    Rational inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  Integer det = determinant(a);
  if (abs(det) != 1) fail(ErrorCode::NotLattice, "matrix is not unimodular (det " + det.get_str() + ")");
  auto q = rational_inverse(a);
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = q[i][j].get_num();
  return r;
}

UnimodularMap::UnimodularMap(IntMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || abs(determinant(m_)) != 1)
    fail(ErrorCode::NotLattice, "matrix is not unimodular");
}

namespace {

// Replaces rows r and i by (s*Rr + t*Ri, -b*Rr + a*Ri); the 2x2 transform
// has determinant s*a + t*b = 1.
void combine_rows(IntMatrix& m, std::size_t r, std::size_t i, const Integer& s,
                  const Integer& t, const Integer& a, const Integer& b) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer x = m(r, j), y = m(i, j);
    m(r, j) = s * x + t * y;
    m(i, j) = a * y - b * x;
  }
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

void sub_row_multiple(IntMatrix& m, std::size_t i, std::size_t r, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= q * m(r, j);
}

template <bool Track>
IntMatrix hnf_impl(const IntMatrix& a, IntMatrix* u) {
  IntMatrix h = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, c) == 0) continue;
      if (h(r, c) == 0) {
        for (std::size_t j = 0; j < h.cols(); ++j) std::swap(h(r, j), h(i, j));
        if constexpr (Track)
          for (std::size_t j = 0; j < u->cols(); ++j) std::swap((*u)(r, j), (*u)(i, j));
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(r, c).get_mpz_t(),
                 h(i, c).get_mpz_t());
      Integer ca = h(r, c) / g, cb = h(i, c) / g;
      combine_rows(h, r, i, s, t, ca, cb);
      if constexpr (Track) combine_rows(*u, r, i, s, t, ca, cb);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      if constexpr (Track) negate_row(*u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (q == 0) continue;
      sub_row_multiple(h, i, r, q);
      if constexpr (Track) sub_row_multiple(*u, i, r, q);
    }
    ++r;
  }
  return h;
}

}  // namespace

std::pair<IntMatrix, UnimodularMap> hermite_normal_form(const IntMatrix& a) {
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix h = hnf_impl<true>(a, &u);
  return {std::move(h), UnimodularMap(std::move(u))};
}

IntMatrix hermite_form(const IntMatrix& a) { return hnf_impl<false>(a, nullptr); }

UnimodularMap complete_to_basis(const IntVector& v) {
  if (!is_primitive(v)) fail(ErrorCode::NotPrimitive, format_vector(v));
  const std::size_t d = v.size();
  // Reduce the reversed column to e_1; conjugating by the reversal turns
  // that into a transform W with W v = e_d, and W^-1 has last column v.
  IntMatrix col(d, 1);
  for (std::size_t i = 0; i < d; ++i) col(i, 0) = v[d - 1 - i];
  auto [h, u] = hermite_normal_form(col);
  IntMatrix w(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) w(i, j) = u.matrix()(d - 1 - i, d - 1 - j);
  return UnimodularMap(unimodular_inverse(w));
}

QuotientProjection quotient_projection(const IntVector& v) {
  UnimodularMap basis = complete_to_basis(v);
  const std::size_t d = v.size();
  IntMatrix w = unimodular_inverse(basis.matrix());
  return QuotientProjection{v, w.submatrix_rows(0, d - 1), basis.matrix().submatrix_cols(0, d - 1)};
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace reflex
