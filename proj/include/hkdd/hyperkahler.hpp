#pragma once

// Hilbert-scheme lattices, natural isometries, Beauville involutions,
// Kummer degrees, and the non-naturality test.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hkdd/dynamics.hpp"
#include "hkdd/errors.hpp"
#include "hkdd/lattice.hpp"

namespace hkdd {

/// H²(S^[n]) ≅ H²(S) ⊕ ℤe with (e, e) = -2n + 2 and e orthogonal to H²(S).
struct HilbertLattice {
  GramLattice base;
  unsigned n = 2;
  std::size_t e_index = 0;  // position of e in the extended basis
  GramLattice extended;

  /// Extended-basis index of base vector i.
  std::size_t extended_index(std::size_t i) const { return i < e_index ? i : i + 1; }
};

/// e is inserted at `e_index` (default: last). Throws BadN for n < 2.
HilbertLattice hilbert_lattice(const GramLattice& base, unsigned n, std::optional<std::size_t> e_index = std::nullopt);

/// g on the base extended by e ↦ e. Throws LatticeMismatch.
LatticeIsometry natural_isometry(const LatticeIsometry& g, const HilbertLattice& h);

/// Geometric hypotheses the caller vouches for; they cannot be checked on lattices.
struct GeometricAssumptions {
  bool no_line = false;      // the quartic contains no line
  bool very_ample = false;   // the norm-4 class is very ample
};

struct BeauvilleCandidate {
  IntMatrix matrix;
  /// (extended basis index, image) for each solved class.
  std::vector<std::pair<std::size_t, IntVector>> images;
  bool involution = false;
  std::size_t invariant_rank = 0;
  bool accepted = false;
  std::string rejection;  // empty when accepted
};

struct BeauvilleResult {
  LatticeIsometry isometry;
  std::vector<BeauvilleCandidate> candidates;  // every solution of the pairing and norm constraints
  std::vector<IntVector> invariant_basis;
  GeometricAssumptions assumptions;
};

/// More than one candidate survived every filter.
class Ambiguous : public Error {
 public:
  Ambiguous(const std::string& what, std::vector<BeauvilleCandidate> c) : Error(what), candidates(std::move(c)) {}
  std::vector<BeauvilleCandidate> candidates;
};

inline constexpr long long kBeauvilleSearchBound = 64;

/// The involution with ι*h = 3h - 4e, ι*e = 2h - 3e, extended to the other basis
/// vectors by pairing and norm constraints, filtered by ι² = 1 and a rank-1
/// invariant lattice. `quartic_class` is an extended-basis index with (h, h) = 4.
/// Throws BadN (n ≠ 2), InvalidArgument (norm of h), NoSolution, Ambiguous.
BeauvilleResult beauville_involution(const HilbertLattice& h, std::size_t quartic_class,
                                     GeometricAssumptions assumptions = {},
                                     long long search_bound = kBeauvilleSearchBound);

/// A matrix in SL(2, ℤ).
class Sl2Matrix {
 public:
  /// Throws NotUnimodular unless ad - bc = 1.
  Sl2Matrix(Integer a, Integer b, Integer c, Integer d);
  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }
  Integer trace() const { return a_ + d_; }
  Sl2Matrix inverse() const { return Sl2Matrix(d_, -b_, -c_, a_); }

 private:
  Integer a_, b_, c_, d_;
};

/// 1 for |t| ≤ 2, else the root > 1 of x² - (t² - 2)x + 1.
FirstDegree kummer_first_degree(const Sl2Matrix& m);

/// degree_spectrum(n, kummer_first_degree(m)). Throws BadN for n < 2.
DegreeSpectrum kummer_spectrum(const Sl2Matrix& m, unsigned n, int precision = 12);

enum class NaturalityVerdict { NotNatural, PossiblyNatural };

std::string to_string(NaturalityVerdict v);

struct NaturalityCertificate {
  NaturalityVerdict verdict = NaturalityVerdict::PossiblyNatural;
  std::vector<IntVector> fixed_basis;
  Integer required_norm;                                // -2n + 2
  std::optional<std::pair<IntVector, Integer>> witness; // fixed generator and its norm
  std::string explanation;
};

/// Necessary condition for being induced from the surface: a fixed class of
/// norm -2n + 2. NotNatural when the fixed lattice provably has none.
NaturalityCertificate naturality_certificate(const LatticeIsometry& m, const HilbertLattice& h);

/// compose(A, B).matrix() = A.matrix() · B.matrix(); with this convention the
/// pullback of ι₂ι₁ is M₁M₂. Throws LatticeMismatch.
LatticeIsometry compose(const LatticeIsometry& a, const LatticeIsometry& b);
LatticeIsometry power(const LatticeIsometry& a, unsigned ell);
LatticeIsometry inverse(const LatticeIsometry& a);

/// Bundled example data.
namespace fixtures {
/// ⟨h1, h2⟩ with Gram [[4, 8], [8, 4]].
GramLattice quartic_pair_lattice();
/// ⟨H1, e, H2⟩ with Gram [[4, 0, 8], [0, -2, 0], [8, 0, 4]].
HilbertLattice quartic_pair_hilbert();
IntMatrix m1();
IntMatrix m2();
IntMatrix m1m2();
/// SL(2, ℤ) samples keyed by trace.
std::vector<std::pair<long long, Sl2Matrix>> sl2_by_trace();
}  // namespace fixtures

}  // namespace hkdd
