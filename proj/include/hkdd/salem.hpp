#pragma once

// Salem polynomials and the cyclotomic-times-Salem classification of
// characteristic polynomials of lattice isometries.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hkdd/polynomial.hpp"

namespace hkdd {

struct CyclotomicFactor {
  unsigned n = 0;             // Φ_n
  unsigned multiplicity = 0;
  friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

struct PeeledPolynomial {
  std::vector<CyclotomicFactor> factors;  // increasing n
  IntPolynomial remainder;                // no cyclotomic factor left
};

/// Divide out every Φ_n with φ(n) <= deg p, n <= 2 deg(p)². Throws NotMonic.
PeeledPolynomial peel_cyclotomic(const IntPolynomial& p);

/// Sturm counts backing a Salem verdict.
struct SalemCertificate {
  bool is_salem = false;
  std::string reason;             // why the test failed, or "ok"
  bool palindromic = false;
  bool even_degree = false;
  bool cyclotomic_free = false;
  std::optional<IntPolynomial> trace_poly;
  std::size_t half_degree = 0;         // d
  std::size_t trace_real_roots = 0;    // distinct real roots of the trace polynomial
  std::size_t trace_roots_above_2 = 0; // in (2, ∞)
  std::size_t trace_roots_inside = 0;  // in (-2, 2)
  bool trace_root_at_pm2 = false;
  std::optional<AlgebraicReal> root;   // the root > 1
};

/// Palindromic, even degree 2d, no cyclotomic factor, trace polynomial with d
/// distinct real roots: one in (2, ∞), d - 1 in (-2, 2), none at ±2.
/// Degree-2 reciprocal units such as x² - 34x + 1 are accepted.
/// Throws NotMonic or DegreeTooSmall.
SalemCertificate is_salem_polynomial(const IntPolynomial& p);

enum class SpectralKind { AllCyclotomic, SalemStructure, NotSpectrallyValid };

std::string to_string(SpectralKind kind);

struct SalemClassification {
  SpectralKind kind = SpectralKind::NotSpectrallyValid;
  std::vector<CyclotomicFactor> cyclotomic_factors;
  std::optional<IntPolynomial> salem_factor;
  std::optional<AlgebraicReal> salem_root;
  IntPolynomial remainder;  // 1, the Salem factor, or whatever failed the test
  std::optional<SalemCertificate> certificate;

  /// Product of the cyclotomic factors and the remainder.
  IntPolynomial reassemble() const;
};

/// Throws NotMonic.
SalemClassification classify_charpoly(const IntPolynomial& p);

}  // namespace hkdd
