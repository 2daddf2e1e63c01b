#include <doctest.h>

#include "hkdd/intlinalg.hpp"
#include "oracles.hpp"

using namespace hkdd;

namespace {

bool in_row_span_over_q(const std::vector<IntVector>& basis, const IntVector& v) {
  IntMatrix a(basis.size() + 1, v.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) a(i, j) = basis[i][j];
  for (std::size_t j = 0; j < v.size(); ++j) a(basis.size(), j) = v[j];
  return rank(a) == basis.size();
}

}  // namespace

TEST_CASE("kernel of M1 - I and M1M2 - I") {
  const IntMatrix m1{{3, 2, 8}, {-4, -3, -8}, {0, 0, -1}};
  const auto k1 = integer_kernel(m1 - IntMatrix::identity(3));
  REQUIRE(k1.size() == 1);
  CHECK((k1[0] == IntVector{1, -1, 0} || k1[0] == IntVector{-1, 1, 0}));

  const IntMatrix g{{45, 10, 16}, {-36, -7, -12}, {-8, -2, -3}};
  const auto k = integer_kernel(g - IntMatrix::identity(3));
  REQUIRE(k.size() == 1);
  CHECK((k[0] == IntVector{1, -6, 1} || k[0] == IntVector{-1, 6, -1}));
}

TEST_CASE("kernel property: A k = 0, primitive vectors, rank-nullity") {
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = static_cast<std::size_t>(oracle::uniform(1, 4));
    const std::size_t c = static_cast<std::size_t>(oracle::uniform(1, 6));
    IntMatrix a = oracle::random_matrix(r, c, 6);
    if (r > 1 && oracle::uniform(0, 1)) {  // force a dependent row
      for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = 2 * a(0, j) - a(1 % r, j);
    }
    const auto ker = integer_kernel(a);
    CHECK(ker.size() + rank(a) == c);
    for (const auto& v : ker) {
      CHECK(a * v == IntVector(r, 0));
      CHECK(content(v) == 1);
    }
  }
}

TEST_CASE("kernel is saturated") {
  // 2x + 4y = 0 has kernel spanned by (2, -1); a non-saturated answer would be (4, -2).
  const auto k = integer_kernel(IntMatrix{{2, 4}});
  REQUIRE(k.size() == 1);
  CHECK(content(k[0]) == 1);
  // Every integer solution in a box lies in the span with integer coefficients.
  const IntMatrix a{{2, 4, 6}};
  const auto ker = integer_kernel(a);
  REQUIRE(ker.size() == 2);
  for (long long x = -6; x <= 6; ++x)
    for (long long y = -6; y <= 6; ++y)
      for (long long z = -6; z <= 6; ++z) {
        if (2 * x + 4 * y + 6 * z != 0) continue;
        CHECK(in_row_span_over_q(ker, IntVector{x, y, z}));
      }
}

TEST_CASE("solve_integer") {
  const IntMatrix a{{3, 2, 6}, {4, 3, 8}};
  auto s = solve_integer(a, IntVector{2, 0});
  REQUIRE(s);
  CHECK(a * s->particular == IntVector{2, 0});
  REQUIRE(s->kernel.size() == 1);
  CHECK(a * s->kernel[0] == IntVector{0, 0});

  CHECK_FALSE(solve_integer(IntMatrix{{2, 4}}, IntVector{3}));
  CHECK_FALSE(solve_integer(IntMatrix{{1, 1}, {1, 1}}, IntVector{0, 1}));

  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix m = oracle::random_matrix(2, 4, 7);
    const IntVector x{oracle::uniform(-5, 5), oracle::uniform(-5, 5), oracle::uniform(-5, 5), oracle::uniform(-5, 5)};
    const IntVector c = m * x;
    auto sol = solve_integer(m, c);
    REQUIRE(sol);
    CHECK(m * sol->particular == c);
  }
}

TEST_CASE("hermite_rows and rank") {
  const auto h = hermite_rows({IntVector{2, 4}, IntVector{1, 2}, IntVector{0, 0}});
  CHECK(h.size() == 1);
  CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(IntMatrix::identity(4)) == 4);
  CHECK(rank(IntMatrix(3, 2)) == 0);
}

TEST_CASE("integer_inverse") {
  const IntMatrix g{{45, 10, 16}, {-36, -7, -12}, {-8, -2, -3}};
  auto inv = integer_inverse(g);
  REQUIRE(inv);
  CHECK(g * *inv == IntMatrix::identity(3));
  CHECK_FALSE(integer_inverse(IntMatrix{{2, 0}, {0, 1}}));
  CHECK_FALSE(integer_inverse(IntMatrix{{1, 2}, {2, 4}}));
}
