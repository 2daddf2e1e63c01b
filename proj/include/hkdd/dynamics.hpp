#pragma once

// Dynamical degree spectra, entropy, symmetric powers, and bounded searches
// for isometries with a Salem factor.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hkdd/lattice.hpp"
#include "hkdd/polynomial.hpp"
#include "hkdd/salem.hpp"

namespace hkdd {

/// First dynamical degree: an algebraic real > 1, or nullopt for exactly 1.
using FirstDegree = std::optional<AlgebraicReal>;

/// Tolerance for the float checks in validate_spectrum_shape.
inline constexpr double kShapeTolerance = 1e-9;

/// Spectral radius of the isometry, read off the cyclotomic × Salem
/// factorisation of its characteristic polynomial. Throws
/// SpectralStructureViolated (with a float estimate) when that structure fails.
FirstDegree first_dynamical_degree(const LatticeIsometry& isometry);
FirstDegree first_dynamical_degree(const IntMatrix& m);

/// Float spectral radius by Gelfand's formula with repeated squaring.
/// Used for diagnostics only.
double estimate_spectral_radius(const IntMatrix& m);

/// Exact d1^ell, defined by the square-free part of charpoly(C^ell) where C is
/// the companion matrix of d1's polynomial. Requires d1 > 1.
AlgebraicReal power_iterate_degree(const AlgebraicReal& d1, unsigned ell);

/// Orders two real algebraic numbers exactly.
int compare_reals(const AlgebraicReal& a, const AlgebraicReal& b);

struct SpectrumEntry {
  unsigned k = 0;
  unsigned exponent = 0;               // min(k, 2n - k)
  std::optional<AlgebraicReal> value;  // d1^exponent; nullopt when it is 1
  std::string exact;                   // "577+408*sqrt(2)", "1", or "root of ... in [..]"
  std::string symbolic;                // "d1^2"
  std::string decimal;
  double approx = 1.0;
};

struct DegreeSpectrum {
  unsigned half_dim = 0;
  FirstDegree d1;
  std::vector<SpectrumEntry> entries;  // k = 0 .. 2n
  double entropy_nats = 0.0;
  double entropy_log10 = 0.0;
  std::string entropy_exact;  // "2*log(17+12*sqrt(2))" or "0"
  std::string entropy_decimal;
  std::string entropy_log10_decimal;
  int precision = 12;

  std::vector<double> decimals() const;
};

/// d_k = d1^min(k, 2n-k), entropy n log d1. Throws BadN when n = 0.
DegreeSpectrum degree_spectrum(unsigned n, const FirstDegree& d1, int precision = 12);

/// The spectrum of g^ell given that of g.
FirstDegree iterate_degree(const FirstDegree& d1, unsigned ell);

struct ShapeReport {
  bool symmetric = true;
  bool endpoints_one = true;
  bool power_law = true;
  bool monotone = true;     // strict rise to the middle (d1 > 1) or constancy (d1 = 1)
  bool log_concave = true;
  std::size_t p = 0;        // first index of the maximum
  std::size_t q = 0;        // last index of the maximum
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks a table (d_0, ..., d_m) against the hyperkähler degree law.
ShapeReport validate_spectrum_shape(std::span<const double> table);
ShapeReport validate_spectrum_shape(const DegreeSpectrum& spectrum);

/// C(r + k - 1, k).
std::size_t sym_power_dimension(std::size_t r, std::size_t k);

/// Action of M on Sym^k in the basis of sorted degree-k monomials (lexicographic).
IntMatrix sym_power_matrix(const IntMatrix& m, unsigned k);

/// Is d1^k an eigenvalue of multiplicity one on Sym^k? Throws
/// SpectralStructureViolated unless the characteristic polynomial has Salem structure.
bool multiplicity_one_check(const IntMatrix& m, unsigned k);

struct SalemIsometry {
  IntMatrix matrix;
  IntPolynomial char_poly;
  IntPolynomial salem_poly;
  AlgebraicReal root;
  std::string origin;  // "direct" or "product of involutions i*j"
};

struct SearchResult {
  std::size_t isometry_count = 0;
  std::vector<IntMatrix> involutions;
  std::size_t products_examined = 0;
  std::vector<SalemIsometry> entries;  // one per Salem polynomial, ascending root
};

/// Every isometry with entries in [-bound, bound] (column-by-column backtracking),
/// plus products of pairs of the involutions found; those with Salem structure,
/// one per Salem polynomial, sorted by root. `threads` = 0 reads HKDD_THREADS.
/// The result does not depend on the thread count.
SearchResult search_salem_isometries(const GramLattice& lattice, unsigned bound, unsigned threads = 0);

/// Worker count: HKDD_THREADS if set and positive, else hardware concurrency.
unsigned default_thread_count();

}  // namespace hkdd
