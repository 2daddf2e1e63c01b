#include "hkdd/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include <boost/multiprecision/integer.hpp>

#include "hkdd/errors.hpp"

namespace hkdd {

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t power) {
  std::vector<Integer> v(power + 1);
  v[power] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw ZeroPolynomial();
  return coeffs_.back();
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long long>(i);
  return IntPolynomial(std::move(d));
}

Integer IntPolynomial::content() const { return hkdd::content(coeffs_); }

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer c = content();
  if (leading() < 0) c = -c;
  std::vector<Integer> v = coeffs_;
  for (auto& x : v) x /= c;
  return IntPolynomial(std::move(v));
}

Integer IntPolynomial::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::eval(const Rational& x) const {
  // Homogenised Horner over the common denominator keeps the arithmetic integral.
  const Integer& num = numerator(x);
  const Integer& den = denominator(x);
  Integer acc = 0;
  Integer den_pow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  // acc = den^deg * p(x); den_pow = den^(deg+1).
  if (coeffs_.empty()) return 0;
  return Rational(acc, den_pow / den);
}

int IntPolynomial::sign_at(const Rational& x) const {
  const Integer& num = numerator(x);
  const Integer& den = denominator(x);
  Integer acc = 0;
  Integer den_pow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  return acc.sign();
}

double IntPolynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial operator*(const Integer& c, const IntPolynomial& p) {
  std::vector<Integer> v = p.coeffs();
  for (auto& x : v) x *= c;
  return IntPolynomial(std::move(v));
}

bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto k = static_cast<std::size_t>(i);
    if (a.coeffs_[k] != b.coeffs_[k]) return a.coeffs_[k] < b.coeffs_[k];
  }
  return false;
}

IntPolynomial pow(const IntPolynomial& p, unsigned e) {
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial base = p;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Matrices

IntPolynomial char_poly(const IntMatrix& m) {
  if (!m.is_square()) throw NonSquare("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  if (n == 0) return IntPolynomial(std::move(c));
  // Faddeev-LeVerrier: N_1 = I, c_{n-k} = -tr(A N_k) / k, N_{k+1} = A N_k + c_{n-k} I.
  IntMatrix nk = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix ank = m * nk;
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += ank(i, i);
    const Integer kk = static_cast<long long>(k);
    if (tr % kk != 0) throw Error("Faddeev-LeVerrier: inexact division (internal error)");
    c[n - k] = -tr / kk;
    if (k < n) {
      for (std::size_t i = 0; i < n; ++i) ank(i, i) += c[n - k];
      nk = std::move(ank);
    }
  }
  return IntPolynomial(std::move(c));
}

IntMatrix companion_matrix(const IntPolynomial& p) {
  if (!p.is_monic()) throw NotMonic();
  const auto n = static_cast<std::size_t>(p.degree());
  IntMatrix c(n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p.coeffs()[i];
  return c;
}

// ---------------------------------------------------------------------------
// Structure

bool is_palindromic(const IntPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  const auto& c = p.coeffs();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n / 2; ++i)
    if (c[i] != c[n - 1 - i]) return false;
  return true;
}

bool is_reciprocal(const IntPolynomial& p) {
  if (is_palindromic(p)) return true;
  const auto& c = p.coeffs();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i)
    if (c[i] != -c[n - 1 - i]) return false;
  return true;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPolynomial cyclotomic(unsigned n) {
  if (n == 0) throw InvalidArgument("cyclotomic polynomial index must be positive");
  static std::mutex mu;
  static std::map<unsigned, IntPolynomial> table;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = table.find(n); it != table.end()) return it->second;
  }
  IntPolynomial p = IntPolynomial::monomial(1, n) - IntPolynomial::constant(1);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d) continue;
    auto q = divide_exact(p, cyclotomic(d));
    if (!q) throw Error("cyclotomic: inexact division (internal error)");
    p = std::move(*q);
  }
  std::lock_guard<std::mutex> lock(mu);
  table.emplace(n, p);
  return p;
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& q) {
  if (q.is_zero()) throw ZeroPolynomial();
  if (p.is_zero()) return IntPolynomial{};
  if (p.degree() < q.degree()) return std::nullopt;
  std::vector<Integer> r = p.coeffs();
  const auto& qc = q.coeffs();
  const Integer& lq = qc.back();
  const auto dq = static_cast<std::size_t>(q.degree());
  std::vector<Integer> quot(r.size() - dq);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Integer& top = r[i + dq];
    if (top == 0) continue;
    if (top % lq != 0) return std::nullopt;
    const Integer t = top / lq;
    quot[i] = t;
    for (std::size_t j = 0; j <= dq; ++j) r[i + j] -= t * qc[j];
  }
  for (std::size_t i = 0; i < dq; ++i)
    if (r[i] != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

IntPolynomial pseudo_remainder(const IntPolynomial& p, const IntPolynomial& q) {
  if (q.is_zero()) throw ZeroPolynomial();
  if (p.degree() < q.degree()) return p;
  const Integer& lq = q.leading();
  int e = p.degree() - q.degree() + 1;
  IntPolynomial r = p;
  while (!r.is_zero() && r.degree() >= q.degree()) {
    IntPolynomial t = IntPolynomial::monomial(r.leading(), static_cast<std::size_t>(r.degree() - q.degree()));
    r = lq * r - t * q;
    --e;
  }
  if (e > 0) r = boost::multiprecision::pow(lq, static_cast<unsigned>(e)) * r;
  return r;
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  IntPolynomial pp = p.primitive_part();
  if (pp.degree() <= 0) return IntPolynomial::constant(1);
  IntPolynomial g = gcd(pp, pp.derivative());
  auto q = divide_exact(pp, g);
  if (!q) throw Error("square_free_part: inexact division (internal error)");
  return q->primitive_part();
}

// ---------------------------------------------------------------------------
// Sturm sequences

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p) {
  std::vector<IntPolynomial> seq;
  seq.push_back(square_free_part(p));
  if (seq.back().degree() <= 0) return seq;
  seq.push_back(seq.back().derivative().primitive_part());
  for (;;) {
    const IntPolynomial& a = seq[seq.size() - 2];
    const IntPolynomial& b = seq.back();
    if (b.degree() <= 0) break;
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^e * rem; undo a negative factor so -rem keeps its sign.
    const int e = a.degree() - b.degree() + 1;
    if (b.leading() < 0 && (e % 2 != 0)) r = -r;
    r = -r;
    Integer c = r.content();
    std::vector<Integer> v = r.coeffs();
    for (auto& x : v) x /= c;
    seq.emplace_back(std::move(v));
  }
  return seq;
}

namespace {

std::size_t variations_at(const std::vector<IntPolynomial>& seq, const Rational& x) {
  std::size_t v = 0;
  int prev = 0;
  for (const auto& s : seq) {
    int sg = s.sign_at(x);
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++v;
    prev = sg;
  }
  return v;
}

std::size_t variations_at_infinity(const std::vector<IntPolynomial>& seq, bool positive) {
  std::size_t v = 0;
  int prev = 0;
  for (const auto& s : seq) {
    if (s.is_zero()) continue;
    int sg = s.leading().sign();
    if (!positive && s.degree() % 2 != 0) sg = -sg;
    if (prev != 0 && sg != prev) ++v;
    prev = sg;
  }
  return v;
}

std::size_t count_with(const std::vector<IntPolynomial>& seq, const std::optional<Rational>& lo,
                       const std::optional<Rational>& hi) {
  if (lo && hi && *lo >= *hi) return 0;
  const std::size_t vlo = lo ? variations_at(seq, *lo) : variations_at_infinity(seq, false);
  const std::size_t vhi = hi ? variations_at(seq, *hi) : variations_at_infinity(seq, true);
  return vlo >= vhi ? vlo - vhi : 0;
}

void bisect_roots(const IntPolynomial& sqf, const std::vector<IntPolynomial>& seq, const Rational& lo,
                  const Rational& hi, std::size_t count, std::vector<AlgebraicReal>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(sqf, lo, hi);
    return;
  }
  const Rational mid = (lo + hi) / 2;
  const std::size_t left = count_with(seq, lo, mid);
  bisect_roots(sqf, seq, lo, mid, left, out);
  bisect_roots(sqf, seq, mid, hi, count - left, out);
}

}  // namespace

std::size_t sturm_count(const IntPolynomial& p, const std::optional<Rational>& lo,
                        const std::optional<Rational>& hi) {
  if (p.is_zero()) throw ZeroPolynomial();
  return count_with(sturm_sequence(p), lo, hi);
}

Integer cauchy_bound(const IntPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  const Integer lc = abs(p.leading());
  Integer m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Integer(abs(p.coeffs()[static_cast<std::size_t>(i)])));
  // Every |root| < 1 + m / lc <= 1 + ceil(m / lc).
  return 1 + (m + lc - 1) / lc;
}

std::vector<AlgebraicReal> isolate_real_roots_in(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw ZeroPolynomial();
  std::vector<AlgebraicReal> out;
  if (lo >= hi) return out;
  auto seq = sturm_sequence(p);
  const IntPolynomial& sqf = seq.front();
  if (sqf.degree() <= 0) return out;
  bisect_roots(sqf, seq, lo, hi, count_with(seq, lo, hi), out);
  return out;
}

std::vector<AlgebraicReal> isolate_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  const IntPolynomial sqf = square_free_part(p);
  if (sqf.degree() <= 0) return {};
  const Integer b = cauchy_bound(sqf);
  return isolate_real_roots_in(sqf, Rational(-b), Rational(b));
}

// ---------------------------------------------------------------------------
// Trace polynomial

IntPolynomial trace_polynomial(const IntPolynomial& p) {
  if (!is_palindromic(p)) throw NotPalindromic();
  if (p.degree() % 2 != 0) throw OddDegree();
  const auto d = static_cast<std::size_t>(p.degree() / 2);
  const auto& c = p.coeffs();
  // x^k + x^-k = T_k(y) with T_0 = 2, T_1 = y, T_{k+1} = y T_k - T_{k-1}.
  const IntPolynomial y = IntPolynomial::x();
  IntPolynomial prev = IntPolynomial::constant(2);
  IntPolynomial cur = y;
  IntPolynomial q = IntPolynomial::constant(c[d]);
  for (std::size_t k = 1; k <= d; ++k) {
    q += c[d + k] * cur;
    IntPolynomial next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return q;
}

// ---------------------------------------------------------------------------
// AlgebraicReal

AlgebraicReal::AlgebraicReal(IntPolynomial poly, Rational lo, Rational hi)
    : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_)) throw InvalidArgument("isolating interval must satisfy lo < hi");
}

AlgebraicReal AlgebraicReal::isolate(const IntPolynomial& poly, const Rational& lo, const Rational& hi) {
  IntPolynomial sqf = square_free_part(poly);
  if (sturm_count(sqf, lo, hi) != 1)
    throw InvalidArgument("interval (" + hkdd::to_string(lo) + ", " + hkdd::to_string(hi) +
                          "] does not isolate exactly one root of " + poly.to_string());
  return AlgebraicReal(std::move(sqf), lo, hi);
}

AlgebraicReal AlgebraicReal::from_integer(const Integer& z) {
  return AlgebraicReal(IntPolynomial(std::vector<Integer>{-z, 1}), Rational(z - 1), Rational(z));
}

AlgebraicReal AlgebraicReal::refine(const Rational& eps) const {
  if (eps <= 0) throw InvalidArgument("refinement width must be positive");
  Rational lo = lo_, hi = hi_;
  int shi = poly_.sign_at(hi);
  int slo = poly_.sign_at(lo);
  std::vector<IntPolynomial> seq;  // built lazily, only when lo is a foreign root
  while (hi - lo >= eps) {
    if (shi == 0) {
      lo = std::max(lo, Rational(hi - eps / 2));
      break;
    }
    const Rational mid = (lo + hi) / 2;
    const int smid = poly_.sign_at(mid);
    if (slo != 0) {
      if (smid == 0 || smid == shi) {
        hi = mid;
        shi = smid;
      } else {
        lo = mid;
        slo = smid;
      }
    } else {
      if (seq.empty()) seq = sturm_sequence(poly_);
      if (count_with(seq, lo, mid) == 1) {
        hi = mid;
        shi = smid;
      } else {
        lo = mid;
        slo = smid;
      }
    }
  }
  return AlgebraicReal(poly_, lo, hi);
}

std::optional<Rational> AlgebraicReal::exact_rational() const {
  if (poly_.degree() == 1) return Rational(-poly_.coeffs()[0], poly_.coeffs()[1]);
  if (poly_.sign_at(hi_) == 0) return hi_;
  return std::nullopt;
}

int AlgebraicReal::compare(const Rational& q) const {
  if (q <= lo_) return 1;
  if (q >= hi_) {
    if (q == hi_ && poly_.sign_at(hi_) == 0) return 0;
    return -1;
  }
  if (sturm_count(poly_, lo_, q) == 1) return poly_.sign_at(q) == 0 ? 0 : -1;
  return 1;
}

double AlgebraicReal::to_double() const {
  if (auto r = exact_rational()) return hkdd::to_double(*r);
  Rational scale = std::max(abs(lo_), abs(hi_));
  if (scale == 0) scale = 1;
  const Rational eps = scale / Rational(boost::multiprecision::pow(Integer(10), 25));
  AlgebraicReal r = refine(eps);
  return hkdd::to_double((r.lo_ + r.hi_) / 2);
}

std::string AlgebraicReal::decimal(int significant) const {
  if (auto r = exact_rational()) return format_decimal(*r, significant);
  double approx = std::abs(to_double());
  Rational scale = approx > 0 ? Rational(approx) : Rational(1, boost::multiprecision::pow(Integer(10), 30));
  const Rational eps = scale / Rational(boost::multiprecision::pow(Integer(10), static_cast<unsigned>(significant + 4)));
  AlgebraicReal r = refine(eps);
  return format_decimal((r.lo_ + r.hi_) / 2, significant);
}

namespace {

std::string render_rational_plus_sqrt(const Rational& p, const Rational& q, const Integer& d) {
  std::ostringstream os;
  const bool has_p = p != 0;
  if (has_p) os << to_string(p);
  if (q == 0) return has_p ? os.str() : "0";
  Rational mag = abs(q);
  if (q < 0)
    os << "-";
  else if (has_p)
    os << "+";
  if (mag != 1) os << to_string(mag) << "*";
  os << "sqrt(" << d << ")";
  return os.str();
}

}  // namespace

std::optional<std::string> AlgebraicReal::closed_form() const {
  if (auto r = exact_rational()) return to_string(*r);
  if (poly_.degree() != 2) return std::nullopt;
  const Integer& a = poly_.coeffs()[2];
  const Integer& b = poly_.coeffs()[1];
  const Integer& c = poly_.coeffs()[0];
  Integer disc = b * b - 4 * a * c;
  Integer f = 1;
  for (Integer k = 2; k * k <= disc && k <= 1000000; ++k) {
    const Integer k2 = k * k;
    while (disc % k2 == 0) {
      disc /= k2;
      f *= k;
    }
  }
  const Rational center(-b, 2 * a);
  Rational coeff(f, 2 * abs(a));
  // The larger root lies above the vertex.
  if (compare(center) < 0) coeff = -coeff;
  if (disc == 1) return to_string(center + coeff);
  return render_rational_plus_sqrt(center, coeff, disc);
}

std::string AlgebraicReal::describe() const {
  if (auto cf = closed_form()) return *cf;
  return "root of " + poly_.to_string() + " in [" + to_string(lo_) + ", " + to_string(hi_) + "]";
}

bool AlgebraicReal::same_root(const AlgebraicReal& other) const {
  const IntPolynomial g = gcd(poly_, other.poly_);
  if (g.degree() <= 0) return false;
  const Rational lo = std::max(lo_, other.lo_);
  const Rational hi = std::min(hi_, other.hi_);
  if (lo >= hi) return false;
  return sturm_count(g, lo, hi) >= 1;
}

}  // namespace hkdd
