#pragma once

// Exact linear algebra over the integers: kernels, affine solutions, Hermite form.

#include <optional>
#include <vector>

#include "hkdd/integer.hpp"

namespace hkdd {

/// Basis of the integer kernel {v ∈ ℤⁿ : A v = 0}, in row Hermite normal form.
/// The basis spans the full (saturated) kernel lattice, so each vector is primitive.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

struct AffineLattice {
  IntVector particular;           // one solution of A y = c
  std::vector<IntVector> kernel;  // all solutions are particular + ℤ-span(kernel)
};

/// Every integer solution of A y = c, or nullopt when none exists.
std::optional<AffineLattice> solve_integer(const IntMatrix& a, const IntVector& c);

/// Row Hermite normal form of the rows in `basis`; zero rows are dropped.
std::vector<IntVector> hermite_rows(std::vector<IntVector> basis);

/// Rank over ℚ.
std::size_t rank(const IntMatrix& a);

/// Inverse over ℤ, or nullopt when the matrix is singular or the inverse is not integral.
std::optional<IntMatrix> integer_inverse(const IntMatrix& a);

}  // namespace hkdd
