#include "hkdd/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "hkdd/errors.hpp"

namespace hkdd {

using Decimal50 = boost::multiprecision::cpp_dec_float_50;

double estimate_spectral_radius(const IntMatrix& m) {
  if (!m.is_square()) throw NonSquare("spectral radius of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 0.0;
  std::vector<double> x(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x[i * n + j] = to_double(m(i, j));

  auto normalize = [&]() {
    double s = 0.0;
    for (double v : x) s += v * v;
    s = std::sqrt(s);
    if (s > 0)
      for (double& v : x) v /= s;
    return s;
  };
  double log_scale = 0.0;  // M^(2^j) = X * exp(log_scale)
  double s = normalize();
  if (s == 0.0) return 0.0;
  log_scale = std::log(s);
  double estimate = s;
  std::vector<double> y(n * n);
  for (int j = 1; j <= 40; ++j) {
    std::fill(y.begin(), y.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const double a = x[i * n + k];
        if (a == 0.0) continue;
        for (std::size_t c = 0; c < n; ++c) y[i * n + c] += a * x[k * n + c];
      }
    x.swap(y);
    log_scale *= 2.0;
    s = normalize();
    if (s == 0.0) return 0.0;  // nilpotent
    log_scale += std::log(s);
    estimate = std::exp(log_scale / std::ldexp(1.0, j));
  }
  return estimate;
}

FirstDegree first_dynamical_degree(const IntMatrix& m) {
  const SalemClassification c = classify_charpoly(char_poly(m));
  switch (c.kind) {
    case SpectralKind::AllCyclotomic:
      return std::nullopt;
    case SpectralKind::SalemStructure:
      return c.salem_root;
    case SpectralKind::NotSpectrallyValid:
      break;
  }
  const double rho = estimate_spectral_radius(m);
  std::ostringstream os;
  os << "characteristic polynomial is not cyclotomic times at most one Salem factor (non-cyclotomic part "
     << c.remainder.to_string() << "); float spectral radius estimate " << rho;
  throw SpectralStructureViolated(os.str(), rho);
}

FirstDegree first_dynamical_degree(const LatticeIsometry& isometry) { return first_dynamical_degree(isometry.matrix()); }

int compare_reals(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.same_root(b)) return 0;
  AlgebraicReal x = a, y = b;
  for (;;) {
    if (x.hi() <= y.lo()) return -1;
    if (y.hi() <= x.lo()) return 1;
    x = x.refine(x.width() / 2);
    y = y.refine(y.width() / 2);
  }
}

namespace {

Rational rational_pow(const Rational& b, unsigned e) {
  return Rational(boost::multiprecision::pow(numerator(b), e), boost::multiprecision::pow(denominator(b), e));
}

}  // namespace

AlgebraicReal power_iterate_degree(const AlgebraicReal& d1, unsigned ell) {
  if (ell == 0) return AlgebraicReal::from_integer(1);
  if (ell == 1) return d1;
  if (d1.compare(Rational(1)) <= 0) throw InvalidArgument("power_iterate_degree requires d1 > 1");
  if (!d1.poly().is_monic()) throw InvalidArgument("power_iterate_degree requires an algebraic integer");

  const IntMatrix c = companion_matrix(d1.poly());
  IntMatrix cl = IntMatrix::identity(c.rows());
  for (unsigned i = 0; i < ell; ++i) cl = cl * c;
  const IntPolynomial power_poly = square_free_part(char_poly(cl));

  AlgebraicReal base = d1;
  while (base.lo() <= 0) base = base.refine(base.width() / 2);
  for (;;) {
    const Rational lo = rational_pow(base.lo(), ell);
    const Rational hi = rational_pow(base.hi(), ell);
    if (sturm_count(power_poly, lo, hi) == 1) return AlgebraicReal(power_poly, lo, hi);
    base = base.refine(base.width() / 2);
  }
}

FirstDegree iterate_degree(const FirstDegree& d1, unsigned ell) {
  if (!d1 || ell == 0) return std::nullopt;
  return power_iterate_degree(*d1, ell);
}

namespace {

Decimal50 high_precision_value(const AlgebraicReal& a) {
  const Rational scale = std::max(Rational(abs(a.lo())), Rational(abs(a.hi())));
  const Rational eps = scale / Rational(boost::multiprecision::pow(Integer(10), 48));
  const AlgebraicReal r = a.refine(eps);
  const Rational mid = (r.lo() + r.hi()) / 2;
  return Decimal50(numerator(mid)) / Decimal50(denominator(mid));
}

// Exact rational value of a fixed-point rendering of v.
Rational to_rational(const Decimal50& v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(45) << v;
  const std::string t = os.str();
  const auto dot = t.find('.');
  if (dot == std::string::npos) return parse_rational(t);
  const std::string frac = t.substr(dot + 1);
  return Rational(parse_integer(t.substr(0, dot) + frac),
                  boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size())));
}

}  // namespace

std::vector<double> DegreeSpectrum::decimals() const {
  std::vector<double> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.approx);
  return out;
}

DegreeSpectrum degree_spectrum(unsigned n, const FirstDegree& d1, int precision) {
  if (n == 0) throw BadN("half dimension n must be at least 1");
  DegreeSpectrum s;
  s.half_dim = n;
  s.d1 = d1;
  s.precision = precision;

  std::map<unsigned, AlgebraicReal> powers;
  for (unsigned k = 0; k <= 2 * n; ++k) {
    SpectrumEntry e;
    e.k = k;
    e.exponent = std::min(k, 2 * n - k);
    if (d1 && e.exponent > 0) {
      auto it = powers.find(e.exponent);
      if (it == powers.end()) it = powers.emplace(e.exponent, power_iterate_degree(*d1, e.exponent)).first;
      e.value = it->second;
      e.exact = it->second.describe();
      e.symbolic = e.exponent == 1 ? "d1" : "d1^" + std::to_string(e.exponent);
      e.decimal = it->second.decimal(precision);
      e.approx = it->second.to_double();
    } else {
      e.exact = "1";
      e.symbolic = "1";
      e.decimal = "1";
      e.approx = 1.0;
    }
    s.entries.push_back(std::move(e));
  }

  if (d1) {
    const Decimal50 h = Decimal50(n) * boost::multiprecision::log(high_precision_value(*d1));
    s.entropy_nats = h.convert_to<double>();
    const Decimal50 h10 = h / boost::multiprecision::log(Decimal50(10));
    s.entropy_log10 = h10.convert_to<double>();
    const std::string base = d1->closed_form().value_or("d1");
    s.entropy_exact = (n == 1 ? "" : std::to_string(n) + "*") + "log(" + base + ")";
    s.entropy_decimal = format_decimal(to_rational(h), precision);
    s.entropy_log10_decimal = format_decimal(to_rational(h10), precision);
  } else {
    s.entropy_exact = "0";
    s.entropy_decimal = "0";
    s.entropy_log10_decimal = "0";
  }
  return s;
}

ShapeReport validate_spectrum_shape(std::span<const double> t) {
  ShapeReport r;
  if (t.empty()) {
    r.violations.push_back("empty table");
    r.endpoints_one = false;
    return r;
  }
  const std::size_t m = t.size() - 1;
  const std::size_t n = m / 2;
  auto close = [](double a, double b) { return std::abs(a - b) <= kShapeTolerance * std::max({1.0, std::abs(a), std::abs(b)}); };

  if (!close(t[0], 1.0) || !close(t[m], 1.0)) {
    r.endpoints_one = false;
    r.violations.push_back("endpoint violation: d_0 and d_m must be 1");
  }
  for (std::size_t k = 0; k <= m; ++k) {
    if (!close(t[k], t[m - k])) {
      r.symmetric = false;
      r.violations.push_back("symmetry violation at k=" + std::to_string(k));
      break;
    }
  }
  if (m >= 1) {
    for (std::size_t k = 0; k <= n; ++k) {
      if (!close(t[k], std::pow(t[1], static_cast<double>(k)))) {
        r.power_law = false;
        r.violations.push_back("power-law violation at k=" + std::to_string(k));
        break;
      }
    }
  }
  const bool trivial = m == 0 || close(t[1], 1.0);
  if (trivial) {
    for (std::size_t k = 0; k <= m; ++k)
      if (!close(t[k], 1.0)) {
        r.monotone = false;
        r.violations.push_back("constancy violation at k=" + std::to_string(k));
        break;
      }
  } else {
    for (std::size_t k = 1; k <= n; ++k)
      if (!(t[k] > t[k - 1])) {
        r.monotone = false;
        r.violations.push_back("strict increase fails at k=" + std::to_string(k));
        break;
      }
    for (std::size_t k = n + 1; k <= m && r.monotone; ++k)
      if (!(t[k] < t[k - 1])) {
        r.monotone = false;
        r.violations.push_back("strict decrease fails at k=" + std::to_string(k));
      }
  }
  for (std::size_t k = 1; k < m; ++k) {
    if (t[k - 1] <= 0 || t[k] <= 0 || t[k + 1] <= 0) {
      r.log_concave = false;
      r.violations.push_back("non-positive entry near k=" + std::to_string(k));
      break;
    }
    if (std::log(t[k - 1]) + std::log(t[k + 1]) > 2 * std::log(t[k]) + kShapeTolerance) {
      r.log_concave = false;
      r.violations.push_back("log-concavity violation at k=" + std::to_string(k));
      break;
    }
  }
  const double top = *std::max_element(t.begin(), t.end());
  r.p = m + 1;
  for (std::size_t k = 0; k <= m; ++k)
    if (close(t[k], top)) {
      r.p = std::min(r.p, k);
      r.q = k;
    }
  return r;
}

ShapeReport validate_spectrum_shape(const DegreeSpectrum& spectrum) {
  const std::vector<double> t = spectrum.decimals();
  return validate_spectrum_shape(std::span<const double>(t));
}

std::size_t sym_power_dimension(std::size_t r, std::size_t k) {
  // C(r + k - 1, k), computed incrementally to stay integral.
  std::size_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (r + i - 1) / i;
  return c;
}

namespace {

std::vector<std::vector<unsigned>> sorted_monomials(unsigned r, unsigned k) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (unsigned i = start; i < r; ++i) {
      cur.push_back(i);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

IntMatrix sym_power_matrix(const IntMatrix& m, unsigned k) {
  if (!m.is_square()) throw NonSquare("symmetric power of a non-square matrix");
  if (k == 0) throw InvalidArgument("symmetric power degree must be positive");
  const auto r = static_cast<unsigned>(m.rows());
  const auto monos = sorted_monomials(r, k);
  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);

  IntMatrix out(monos.size(), monos.size());
  for (std::size_t col = 0; col < monos.size(); ++col) {
    std::map<std::vector<unsigned>, Integer> image{{{}, Integer(1)}};
    for (unsigned s : monos[col]) {
      std::map<std::vector<unsigned>, Integer> next;
      for (const auto& [mono, coef] : image)
        for (unsigned a = 0; a < r; ++a) {
          if (m(a, s) == 0) continue;
          std::vector<unsigned> t = mono;
          t.insert(std::upper_bound(t.begin(), t.end(), a), a);
          next[t] += coef * m(a, s);
        }
      image = std::move(next);
    }
    for (const auto& [mono, coef] : image) out(index.at(mono), col) = coef;
  }
  return out;
}

bool multiplicity_one_check(const IntMatrix& m, unsigned k) {
  if (k == 0) throw InvalidArgument("multiplicity check needs k >= 1");
  const IntPolynomial cp = char_poly(m);
  const SalemClassification c = classify_charpoly(cp);
  if (c.kind != SpectralKind::SalemStructure)
    throw SpectralStructureViolated("multiplicity check needs Salem structure, got " + to_string(c.kind),
                                    estimate_spectral_radius(m));
  // Eigenvalues of modulus d1 are the copies of the Salem root; every other
  // eigenvalue has modulus 1 or 1/d1, so a k-fold product reaches d1^k only
  // by choosing the Salem root k times. With the root of multiplicity mult,
  // that happens for C(mult + k - 1, k) multisets.
  unsigned mult = 0;
  IntPolynomial rest = cp;
  while (auto q = divide_exact(rest, *c.salem_factor)) {
    rest = std::move(*q);
    ++mult;
  }
  const SalemCertificate& cert = *c.certificate;
  const std::size_t roots_above_one = cert.trace_roots_above_2;  // one per copy of the factor
  return sym_power_dimension(mult * roots_above_one, k) == 1;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("HKDD_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

using SmallVec = std::vector<long long>;

struct SmallGram {
  std::size_t r;
  std::vector<long long> g;
  long long pair(const SmallVec& a, const SmallVec& b) const {
    long long s = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) s += a[i] * g[i * r + j] * b[j];
    return s;
  }
};

std::vector<SmallVec> vectors_of_norm(const SmallGram& g, long long norm, long long bound) {
  std::vector<SmallVec> out;
  SmallVec v(g.r, -bound);
  for (;;) {
    if (g.pair(v, v) == norm) out.push_back(v);
    std::size_t i = g.r;
    while (i-- > 0) {
      if (v[i] < bound) {
        ++v[i];
        break;
      }
      v[i] = -bound;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

IntMatrix to_matrix(const std::vector<SmallVec>& columns) {
  const std::size_t r = columns.size();
  IntMatrix m(r, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) m(i, j) = columns[j][i];
  return m;
}

bool matrix_less(const IntMatrix& a, const IntMatrix& b) {
  const Integer ma = a.max_abs(), mb = b.max_abs();
  if (ma != mb) return ma < mb;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
  return false;
}

struct Candidate {
  IntMatrix matrix;
  std::string origin;
  bool direct;
};

// Runs f(i) for i in [0, count) on `threads` workers; results are placed by index.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, unsigned threads, F f) {
  std::vector<T> out(count);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) out[i] = f(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace

SearchResult search_salem_isometries(const GramLattice& lattice, unsigned bound, unsigned threads) {
  if (threads == 0) threads = default_thread_count();
  const std::size_t r = lattice.rank();
  SmallGram g{r, std::vector<long long>(r * r)};
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Integer& x = lattice.gram()(i, j);
      if (abs(x) > 1000000) throw InvalidArgument("search supports gram entries up to 10^6 in magnitude");
      g.g[i * r + j] = x.convert_to<long long>();
    }
  const auto b = static_cast<long long>(bound);

  std::map<long long, std::vector<SmallVec>> by_norm;
  std::vector<const std::vector<SmallVec>*> column_candidates(r);
  for (std::size_t j = 0; j < r; ++j) {
    const long long norm = g.g[j * r + j];
    auto it = by_norm.find(norm);
    if (it == by_norm.end()) it = by_norm.emplace(norm, vectors_of_norm(g, norm, b)).first;
    column_candidates[j] = &it->second;
  }

  const bool degenerate = determinant(lattice.gram()) == 0;
  auto first_column = *column_candidates[0];
  // Backtracking over later columns, fanned out over the choices for column 0.
  auto found = parallel_map<std::vector<IntMatrix>>(first_column.size(), threads, [&](std::size_t idx) {
    std::vector<IntMatrix> local;
    std::vector<SmallVec> cols{first_column[idx]};
    auto rec = [&](auto&& self, std::size_t j) -> void {
      if (j == r) {
        IntMatrix m = to_matrix(cols);
        if (degenerate) {
          const Integer d = determinant(m);
          if (d != 1 && d != -1) return;
        }
        local.push_back(std::move(m));
        return;
      }
      for (const auto& v : *column_candidates[j]) {
        bool ok = true;
        for (std::size_t i = 0; i < j && ok; ++i) ok = g.pair(cols[i], v) == g.g[i * r + j];
        if (!ok) continue;
        cols.push_back(v);
        self(self, j + 1);
        cols.pop_back();
      }
    };
    rec(rec, 1);
    return local;
  });

  SearchResult result;
  std::vector<Candidate> candidates;
  const IntMatrix id = IntMatrix::identity(r);
  for (auto& chunk : found)
    for (auto& m : chunk) {
      ++result.isometry_count;
      if (m != id && m * m == id) result.involutions.push_back(m);
      candidates.push_back({std::move(m), "direct", true});
    }
  std::sort(result.involutions.begin(), result.involutions.end(), matrix_less);

  const std::size_t ni = result.involutions.size();
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t j = i + 1; j < ni; ++j) {
      candidates.push_back({result.involutions[i] * result.involutions[j],
                            "product of involutions " + std::to_string(i) + "*" + std::to_string(j), false});
      ++result.products_examined;
    }

  // Classify, memoised by characteristic polynomial.
  auto polys = parallel_map<IntPolynomial>(candidates.size(), threads,
                                           [&](std::size_t i) { return char_poly(candidates[i].matrix); });
  std::map<IntPolynomial, std::size_t> distinct;
  std::vector<IntPolynomial> keys;
  for (const auto& p : polys)
    if (distinct.emplace(p, keys.size()).second) keys.push_back(p);
  auto classes = parallel_map<SalemClassification>(keys.size(), threads,
                                                   [&](std::size_t i) { return classify_charpoly(keys[i]); });

  std::map<IntPolynomial, SalemIsometry> best;
  std::map<IntPolynomial, bool> best_direct;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const SalemClassification& c = classes[distinct.at(polys[i])];
    if (c.kind != SpectralKind::SalemStructure) continue;
    const IntPolynomial& key = *c.salem_factor;
    auto it = best.find(key);
    const bool better = it == best.end() || (candidates[i].direct && !best_direct[key]) ||
                        (candidates[i].direct == best_direct[key] && matrix_less(candidates[i].matrix, it->second.matrix));
    if (!better) continue;
    SalemIsometry e{candidates[i].matrix, polys[i], key, *c.salem_root, candidates[i].origin};
    if (it == best.end())
      best.emplace(key, std::move(e));
    else
      it->second = std::move(e);
    best_direct[key] = candidates[i].direct;
  }
  for (auto& [key, e] : best) result.entries.push_back(std::move(e));
  std::sort(result.entries.begin(), result.entries.end(), [](const SalemIsometry& a, const SalemIsometry& b) {
    const int c = compare_reals(a.root, b.root);
    if (c != 0) return c < 0;
    return a.salem_poly < b.salem_poly;
  });
  return result;
}

}  // namespace hkdd
