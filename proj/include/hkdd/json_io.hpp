#pragma once

// JSON forms of lattices, isometries, polynomials, algebraic reals,
// classifications and degree spectra.

#include <string>

#include <json.hpp>

#include "hkdd/dynamics.hpp"
#include "hkdd/lattice.hpp"
#include "hkdd/polynomial.hpp"
#include "hkdd/salem.hpp"

namespace hkdd {

using Json = nlohmann::ordered_json;

/// A number when |z| < 2^53, else a decimal string.
Json integer_to_json(const Integer& z);
/// Accepts integral numbers and decimal strings. Throws ParseError.
Integer integer_from_json(const Json& j);

Json to_json(const IntVector& v);
IntVector vector_from_json(const Json& j);

/// Row-major list of lists.
Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

/// {"labels": [...], "gram": [[...]]}
Json to_json(const GramLattice& lattice);
GramLattice lattice_from_json(const Json& j);

/// {"matrix": [[...]]}
Json to_json(const LatticeIsometry& isometry);
/// Reads {"matrix": ...} or a bare matrix.
IntMatrix isometry_matrix_from_json(const Json& j);

/// Coefficients, constant term first.
Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

/// {"poly": [...], "lo": "p/q", "hi": "p/q", "decimal": "..."}
Json to_json(const AlgebraicReal& a, int precision = 12);
/// Checked: the interval must isolate exactly one root.
AlgebraicReal algebraic_real_from_json(const Json& j);

/// {"kind", "cyclotomic": [[n, m], ...], "salem_poly", "salem_root"}
Json to_json(const SalemClassification& c, int precision = 12);

Json to_json(const DegreeSpectrum& s);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);
/// Throws ParseError.
Json parse_json(const std::string& text);
/// Throws ParseError when the file cannot be read or parsed.
Json read_json_file(const std::string& path);

}  // namespace hkdd
