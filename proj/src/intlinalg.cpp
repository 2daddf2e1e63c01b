#include "hkdd/intlinalg.hpp"

#include <utility>

#include "hkdd/errors.hpp"

namespace hkdd {
namespace {

struct Bezout {
  Integer g, s, t;  // g = s*a + t*b, g >= 0
};

Bezout extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// Replace columns (c, j) of every matrix in `ms` by the unimodular combination
// [col_c, col_j] * [[s, -b/g], [t, a/g]].
void column_combine(std::vector<IntMatrix*> ms, std::size_t c, std::size_t j, const Integer& s, const Integer& t,
                    const Integer& u, const Integer& v) {
  for (IntMatrix* m : ms) {
    for (std::size_t i = 0; i < m->rows(); ++i) {
      Integer x = (*m)(i, c), y = (*m)(i, j);
      (*m)(i, c) = s * x + t * y;
      (*m)(i, j) = u * x + v * y;
    }
  }
}

struct ColumnEchelon {
  IntMatrix b;  // A * U, column echelon form
  IntMatrix u;  // unimodular
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // pivot row of echelon column k
};

ColumnEchelon column_echelon(const IntMatrix& a) {
  ColumnEchelon e{a, IntMatrix::identity(a.cols()), 0, {}};
  const std::size_t n = a.cols();
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.rows() && c < n; ++i) {
    for (std::size_t j = c + 1; j < n; ++j) {
      const Integer& bj = e.b(i, j);
      if (bj == 0) continue;
      Integer ac = e.b(i, c);
      Integer bjv = bj;
      Bezout z = extended_gcd(ac, bjv);
      column_combine({&e.b, &e.u}, c, j, z.s, z.t, -bjv / z.g, ac / z.g);
    }
    if (e.b(i, c) != 0) {
      e.pivot_rows.push_back(i);
      ++c;
    }
  }
  e.rank = c;
  return e;
}

}  // namespace

std::vector<IntVector> hermite_rows(std::vector<IntVector> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Integer a = rows[r][col], b = rows[i][col];
      Bezout z = extended_gcd(a, b);
      Integer u = -b / z.g, v = a / z.g;
      for (std::size_t k = 0; k < n; ++k) {
        Integer x = rows[r][k], y = rows[i][k];
        rows[r][k] = z.s * x + z.t * y;
        rows[i][k] = u * x + v * y;
      }
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0)
      for (auto& x : rows[r]) x = -x;
    const Integer pivot = rows[r][col];
    for (std::size_t i = 0; i < r; ++i) {
      // Floor division keeps the reduced entry in [0, pivot).
      Integer q = rows[i][col] / pivot;
      if (rows[i][col] - q * pivot < 0) --q;
      if (q == 0) continue;
      for (std::size_t k = 0; k < n; ++k) rows[i][k] -= q * rows[r][k];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
  ColumnEchelon e = column_echelon(a);
  std::vector<IntVector> basis;
  for (std::size_t j = e.rank; j < a.cols(); ++j) basis.push_back(e.u.column(j));
  basis = hermite_rows(std::move(basis));
  for (auto& v : basis) {
    Integer g = content(v);
    if (g > 1)
      for (auto& x : v) x /= g;
  }
  return basis;
}

std::optional<AffineLattice> solve_integer(const IntMatrix& a, const IntVector& c) {
  if (c.size() != a.rows()) throw DimensionMismatch("solve_integer: right-hand side has wrong length");
  ColumnEchelon e = column_echelon(a);
  IntVector z(a.cols());
  for (std::size_t k = 0; k < e.rank; ++k) {
    const std::size_t i = e.pivot_rows[k];
    Integer rhs = c[i];
    for (std::size_t l = 0; l < k; ++l) rhs -= e.b(i, l) * z[l];
    if (rhs % e.b(i, k) != 0) return std::nullopt;
    z[k] = rhs / e.b(i, k);
  }
  if (e.b * z != c) return std::nullopt;
  AffineLattice out;
  out.particular = e.u * z;
  for (std::size_t j = e.rank; j < a.cols(); ++j) out.kernel.push_back(e.u.column(j));
  return out;
}

std::size_t rank(const IntMatrix& a) { return column_echelon(a).rank; }

std::optional<IntMatrix> integer_inverse(const IntMatrix& a) {
  if (!a.is_square()) throw NonSquare("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a(i, j));
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[col]);
    const Rational pivot = m[col][col];
    for (auto& x : m[col]) x /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = m[i][n + j];
      if (denominator(x) != 1) return std::nullopt;
      inv(i, j) = numerator(x);
    }
  return inv;
}

}  // namespace hkdd
