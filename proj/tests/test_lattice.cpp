#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reflex/error.hpp"
#include "reflex/lattice.hpp"
#include "support.hpp"

using namespace reflex;
using testing::vec;

namespace {

IntMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937& rng) {
  std::uniform_int_distribution<int> e(-5, 5);
  IntMatrix a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = e(rng);
  return a;
}

// Reduced row echelon shape with positive pivots and reduced entries above.
bool is_hermite(const IntMatrix& h) {
  long last = -1;
  bool zero_seen = false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    long pivot = -1;
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h(i, j) != 0) {
        pivot = static_cast<long>(j);
        break;
      }
    if (pivot < 0) {
      zero_seen = true;
      continue;
    }
    if (zero_seen || pivot <= last) return false;
    if (h(i, pivot) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h(k, pivot) < 0 || h(k, pivot) >= h(i, pivot)) return false;
    last = pivot;
  }
  return true;
}

}  // namespace

TEST_CASE("vector basics") {
  CHECK(dot(vec({1, 2, 3}), vec({4, -5, 6})) == 12);
  CHECK(content(vec({4, -6, 10})) == 2);
  CHECK(content(vec({0, 0})) == 0);
  CHECK(segment_lattice_count(vec({0, 0}), vec({4, 6})) == 3);
  CHECK(graded_lex_less(vec({1, -1}), vec({0, 1})));
  CHECK(format_vector(vec({1, 0, -2})) == "(1,0,-2)");
}

TEST_CASE("primitivize") {
  SUBCASE("examples") {
    auto [p, g] = primitivize(vec({4, -6}));
    CHECK(p == vec({2, -3}));
    CHECK(g == 2);
    CHECK(primitivize(vec({0, -3})).first == vec({0, -1}));
    CHECK_THROWS_AS(primitivize(vec({0, 0, 0})), Error);
  }
  SUBCASE("g * p == v with gcd(p) = 1") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> e(-30, 30);
    for (int t = 0; t < 500; ++t) {
      IntVector v{e(rng), e(rng), e(rng)};
      if (is_zero(v)) continue;
      auto [p, g] = primitivize(v);
      CHECK(content(p) == 1);
      CHECK(g >= 1);
      CHECK(g * p == v);
      CHECK(is_primitive(p));
    }
  }
}

TEST_CASE("determinant and inverse") {
  IntMatrix a = IntMatrix::from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  CHECK(determinant(a) == 18);
  CHECK(rank(a) == 3);
  CHECK(rank(IntMatrix::from_rows({{1, 2}, {2, 4}})) == 1);
  IntMatrix u = IntMatrix::from_rows({{2, 1}, {1, 1}});
  CHECK(unimodular_inverse(u) * u == IntMatrix::identity(2));
  CHECK_THROWS_AS(unimodular_inverse(a), Error);
  CHECK(affine_dimension(testing::pts({{1, 0}, {2, 0}, {3, 0}})) == 1);
  CHECK(affine_dimension({}) == -1);
}

TEST_CASE("hermite normal form examples") {
  auto [h, u] = hermite_normal_form(IntMatrix::from_rows({{2, 4}, {1, 3}}));
  CHECK(h == IntMatrix::from_rows({{1, 1}, {0, 2}}));
  CHECK(u.matrix() * IntMatrix::from_rows({{2, 4}, {1, 3}}) == h);
  CHECK(hermite_form(IntMatrix::from_rows({{0, 0}, {0, 3}})) == IntMatrix::from_rows({{0, 3}, {0, 0}}));
}

TEST_CASE("hermite form is a left-unimodular invariant") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int t = 0; t < 1000; ++t) {
    std::size_t r = dim(rng), c = dim(rng);
    IntMatrix a = random_matrix(r, c, rng);
    IntMatrix v = testing::random_unimodular(r, rng);
    auto [h, u] = hermite_normal_form(a);
    REQUIRE(is_hermite(h));
    CHECK(abs(determinant(u.matrix())) == 1);
    CHECK(u.matrix() * a == h);
    CHECK(hermite_form(v * a) == h);
    CHECK(hermite_form(h) == h);
  }
}

TEST_CASE("complete_to_basis") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(-9, 9);
  for (int t = 0; t < 300; ++t) {
    IntVector v{e(rng), e(rng), e(rng), e(rng)};
    if (is_zero(v)) continue;
    v = primitivize(v).first;
    auto u = complete_to_basis(v);
    CHECK(abs(determinant(u.matrix())) == 1);
    CHECK(u.matrix().col(3) == v);
  }
  CHECK_THROWS_AS(complete_to_basis(vec({2, 4})), Error);
}

TEST_CASE("quotient_projection") {
  SUBCASE("v = (1,1)") {
    auto q = quotient_projection(vec({1, 1}));
    CHECK(q.proj.rows() == 1);
    CHECK(is_zero(q.project(vec({1, 1}))));
    CHECK(q.proj * q.lift == IntMatrix::identity(1));
  }
  SUBCASE("v = e4 keeps the first three coordinates") {
    auto q = quotient_projection(vec({0, 0, 0, 1}));
    CHECK(q.project(vec({5, 6, 7, 8})) == vec({5, 6, 7}));
  }
  SUBCASE("random primitive directions") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> e(-6, 6);
    for (int t = 0; t < 300; ++t) {
      IntVector v{e(rng), e(rng), e(rng)};
      if (is_zero(v)) continue;
      v = primitivize(v).first;
      auto q = quotient_projection(v);
      CHECK(is_zero(q.project(v)));
      CHECK(q.proj * q.lift == IntMatrix::identity(2));
      // Kernel is exactly Zv: x - lift(proj x) is a multiple of v.
      IntVector x{e(rng), e(rng), e(rng)};
      IntVector r = x - q.lift_point(q.project(x));
      CHECK(rank(std::vector<IntVector>{r, v}) <= 1);
    }
  }
}

TEST_CASE("isqrt and lcm") {
  CHECK(isqrt(Integer(0)) == 0);
  CHECK(isqrt(Integer(15)) == 3);
  CHECK(isqrt(Integer(16)) == 4);
  CHECK(lcm(Integer(4), Integer(6)) == 12);
}
