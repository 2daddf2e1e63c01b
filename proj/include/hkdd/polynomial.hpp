#pragma once

// Integer polynomials, characteristic polynomials, cyclotomic polynomials,
// Sturm sequences, and real algebraic numbers given by isolating intervals.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hkdd/integer.hpp"

namespace hkdd {

/// Polynomial with integer coefficients; coeffs()[i] multiplies x^i.
/// The zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, std::size_t power);
  static IntPolynomial x() { return monomial(1, 1); }

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  const Integer& leading() const;
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  IntPolynomial derivative() const;
  Integer content() const;
  /// Divided by its content, with positive leading coefficient.
  IntPolynomial primitive_part() const;

  Integer eval(const Integer& x) const;
  Rational eval(const Rational& x) const;
  /// Sign of the value at x: -1, 0 or 1.
  int sign_at(const Rational& x) const;
  double eval(double x) const;

  /// "x^3 - 35*x^2 + 35*x - 1"
  std::string to_string(const std::string& var = "x") const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial operator-() const;

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  friend bool operator<(const IntPolynomial& a, const IntPolynomial& b);

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPolynomial pow(const IntPolynomial& p, unsigned e);

/// det(xI - M) by Faddeev-LeVerrier with exact integer division. Throws NonSquare.
IntPolynomial char_poly(const IntMatrix& m);

/// Companion matrix of a monic polynomial (its characteristic polynomial is p).
IntMatrix companion_matrix(const IntPolynomial& p);

/// x^deg p(1/x) = ±p. Throws ZeroPolynomial.
bool is_reciprocal(const IntPolynomial& p);
/// x^deg p(1/x) = p.
bool is_palindromic(const IntPolynomial& p);

/// Φ_n, memoised. Throws InvalidArgument for n = 0.
IntPolynomial cyclotomic(unsigned n);

/// Euler's totient.
unsigned long euler_phi(unsigned long n);

/// r with p = q r over ℤ, or nullopt. Throws ZeroPolynomial when q = 0.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& q);

/// Pseudo-remainder lc(q)^(deg p - deg q + 1) p mod q.
IntPolynomial pseudo_remainder(const IntPolynomial& p, const IntPolynomial& q);

/// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// p / gcd(p, p'), primitive with positive leading coefficient.
IntPolynomial square_free_part(const IntPolynomial& p);

/// Sturm sequence of the square-free part of p (each term up to a positive factor).
std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p);

/// Number of distinct real roots in (lo, hi]. An absent bound is -∞ (lo) or +∞ (hi).
std::size_t sturm_count(const IntPolynomial& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi);

/// Integer B with every real root inside (-B, B].
Integer cauchy_bound(const IntPolynomial& p);

/// q with p(x) = x^d q(x + 1/x), for palindromic p of degree 2d.
/// Throws NotPalindromic or OddDegree.
IntPolynomial trace_polynomial(const IntPolynomial& p);

/// A real root of `poly`, the only one in the half-open interval (lo, hi].
class AlgebraicReal {
 public:
  /// Trusted constructor: the caller guarantees the isolation property.
  AlgebraicReal(IntPolynomial poly, Rational lo, Rational hi);

  /// Checked constructor: square-free part is taken and exactly one root must lie in (lo, hi].
  static AlgebraicReal isolate(const IntPolynomial& poly, const Rational& lo, const Rational& hi);
  static AlgebraicReal from_integer(const Integer& z);

  const IntPolynomial& poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }

  /// Nested interval of width < eps containing the same root.
  AlgebraicReal refine(const Rational& eps) const;

  /// Exact value when the root is rational and sits on an endpoint.
  std::optional<Rational> exact_rational() const;

  /// -1, 0, 1 for root < q, root = q, root > q.
  int compare(const Rational& q) const;

  double to_double() const;
  /// Fixed-point decimal with `significant` significant digits (default 12).
  std::string decimal(int significant = 12) const;

  /// Closed form "p+q*sqrt(D)" for rational or quadratic roots, else nullopt.
  std::optional<std::string> closed_form() const;
  /// closed_form(), or "root of <poly> in [lo, hi]".
  std::string describe() const;

  /// Same root (same defining polynomial up to sign and overlapping intervals refined apart).
  bool same_root(const AlgebraicReal& other) const;

 private:
  IntPolynomial poly_;
  Rational lo_;
  Rational hi_;
};

/// Every distinct real root of p, ascending, over its square-free part. Throws ZeroPolynomial.
std::vector<AlgebraicReal> isolate_real_roots(const IntPolynomial& p);

/// Distinct real roots in (lo, hi], ascending.
std::vector<AlgebraicReal> isolate_real_roots_in(const IntPolynomial& p, const Rational& lo, const Rational& hi);

inline AlgebraicReal refine(const AlgebraicReal& a, const Rational& eps) { return a.refine(eps); }

}  // namespace hkdd
