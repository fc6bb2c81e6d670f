#pragma once

// Exact integer linear algebra on Z^d: vectors, matrices, Hermite normal
// form, basis completion and quotient lattices M / Zv.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace reflex {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> coords);
IntVector zero_vector(std::size_t d);
IntVector unit_vector(std::size_t d, std::size_t i);

Integer dot(const IntVector& a, const IntVector& b);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector operator*(const Integer& s, const IntVector& a);
bool is_zero(const IntVector& v);

/// Lexicographic comparison (GMP integers have no operator<=>).
std::strong_ordering lex_compare(const IntVector& a, const IntVector& b);
struct LexLess {
  bool operator()(const IntVector& a, const IntVector& b) const {
    return lex_compare(a, b) < 0;
  }
};

/// Graded lexicographic order: coordinate sum first, then lexicographic.
/// This is the canonical vertex order used for all output.
bool graded_lex_less(const IntVector& a, const IntVector& b);

/// Nonnegative gcd of the coordinates; 0 for the zero vector.
Integer content(const IntVector& v);

/// Splits v = g * p with p primitive and g >= 1. Throws ZeroVector.
std::pair<IntVector, Integer> primitivize(const IntVector& v);
bool is_primitive(const IntVector& v);

/// Number of lattice points on the segment [a, b] (gcd of b - a, plus one).
Integer segment_lattice_count(const IntVector& a, const IntVector& b);

std::string format_vector(const IntVector& v);

/// Rational point x = num / den with den > 0 and gcd(num, den) = 1.
struct RationalPoint {
  IntVector num;
  Integer den = 1;

  RationalPoint() = default;
  explicit RationalPoint(IntVector p) : num(std::move(p)), den(1) {}
  RationalPoint(IntVector n, Integer d);

  std::size_t dim() const { return num.size(); }
  bool is_integral() const { return den == 1; }
  std::vector<Rational> coords() const;
  static RationalPoint from_coords(std::span<const Rational> q);

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
    return a.den == b.den && a.num == b.num;
  }
};
bool operator<(const RationalPoint& a, const RationalPoint& b);
std::string format_point(const RationalPoint& p);

/// Rectangular integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix from_columns(const std::vector<IntVector>& cols);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;
  IntMatrix transpose() const;
  IntMatrix submatrix_rows(std::size_t first, std::size_t count) const;
  IntMatrix submatrix_cols(std::size_t first, std::size_t count) const;

  IntMatrix operator*(const IntMatrix& other) const;
  IntVector operator*(const IntVector& v) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  /// Shape first, then row-major lexicographic.
  friend std::strong_ordering compare(const IntMatrix& a, const IntMatrix& b);
  friend bool operator<(const IntMatrix& a, const IntMatrix& b) {
    return compare(a, b) < 0;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& a);
std::size_t rank(const IntMatrix& a);
std::size_t rank(const std::vector<IntVector>& rows);
/// Dimension of the affine hull of the points; -1 for an empty set.
long affine_dimension(const std::vector<IntVector>& points);

/// Exact inverse over Q. Throws NotLattice on a singular matrix.
std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& a);
/// Inverse of a unimodular matrix. Throws NotLattice if |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// A d x d integer matrix with determinant +-1.
class UnimodularMap {
 public:
  explicit UnimodularMap(IntMatrix m);
  const IntMatrix& matrix() const { return m_; }
  IntVector apply(const IntVector& v) const { return m_ * v; }
  UnimodularMap inverse() const { return UnimodularMap(unimodular_inverse(m_)); }

 private:
  IntMatrix m_;
};

/// Hermite normal form under left multiplication.
///
/// Returns (H, U) with H = U * A and U unimodular. H is in reduced row
/// echelon form: pivot columns strictly increase down the rows, every pivot
/// is positive, entries above a pivot lie in [0, pivot), and zero rows come
/// last. H is the unique such matrix in the orbit {V * A : V unimodular}.
std::pair<IntMatrix, UnimodularMap> hermite_normal_form(const IntMatrix& a);
/// Same as above without accumulating the transform.
IntMatrix hermite_form(const IntMatrix& a);

/// U with det +-1 whose last column is v. Throws NotPrimitive.
UnimodularMap complete_to_basis(const IntVector& v);

/// Coordinates on M / Zv.
///
/// proj is (d-1) x d with proj * v = 0 and kernel exactly Zv; lift is
/// d x (d-1) with proj * lift = I.
struct QuotientProjection {
  IntVector direction;
  IntMatrix proj;
  IntMatrix lift;

  IntVector project(const IntVector& x) const { return proj * x; }
  IntVector lift_point(const IntVector& y) const { return lift * y; }
  /// Pulls a covector on M / Zv back to N; the image is v-perp.
  IntVector pull_back(const IntVector& covector) const {
    return proj.transpose() * covector;
  }
};

QuotientProjection quotient_projection(const IntVector& v);

Integer lcm(const Integer& a, const Integer& b);
/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);

}  // namespace reflex
