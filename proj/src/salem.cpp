#include "hkdd/salem.hpp"

#include "hkdd/errors.hpp"

namespace hkdd {

PeeledPolynomial peel_cyclotomic(const IntPolynomial& p) {
  if (!p.is_monic()) throw NotMonic();
  PeeledPolynomial out;
  out.remainder = p;
  const auto deg = static_cast<unsigned long>(p.degree());
  // φ(n) >= sqrt(n / 2), so φ(n) <= deg forces n <= 2 deg².
  const unsigned long limit = 2 * deg * deg;
  for (unsigned long n = 1; n <= limit && out.remainder.degree() > 0; ++n) {
    if (euler_phi(n) > static_cast<unsigned long>(out.remainder.degree())) continue;
    const IntPolynomial phi = cyclotomic(static_cast<unsigned>(n));
    unsigned mult = 0;
    while (auto q = divide_exact(out.remainder, phi)) {
      out.remainder = std::move(*q);
      ++mult;
      if (out.remainder.degree() < phi.degree()) break;
    }
    if (mult) out.factors.push_back({static_cast<unsigned>(n), mult});
  }
  return out;
}

SalemCertificate is_salem_polynomial(const IntPolynomial& p) {
  if (!p.is_monic()) throw NotMonic();
  if (p.degree() < 2) throw DegreeTooSmall();

  SalemCertificate cert;
  cert.palindromic = is_palindromic(p);
  cert.even_degree = p.degree() % 2 == 0;
  if (!cert.palindromic) {
    cert.reason = "not palindromic";
    return cert;
  }
  if (!cert.even_degree) {
    cert.reason = "odd degree";
    return cert;
  }
  cert.cyclotomic_free = peel_cyclotomic(p).factors.empty();
  if (!cert.cyclotomic_free) {
    cert.reason = "has a cyclotomic factor";
    return cert;
  }
  const IntPolynomial q = trace_polynomial(p);
  cert.trace_poly = q;
  cert.half_degree = static_cast<std::size_t>(p.degree() / 2);
  cert.trace_real_roots = sturm_count(q, std::nullopt, std::nullopt);
  cert.trace_roots_above_2 = sturm_count(q, Rational(2), std::nullopt);
  // (-2, 2) = (-2, 2] minus a possible root at 2.
  const bool root_at_2 = q.sign_at(Rational(2)) == 0;
  const bool root_at_m2 = q.sign_at(Rational(-2)) == 0;
  cert.trace_root_at_pm2 = root_at_2 || root_at_m2;
  cert.trace_roots_inside = sturm_count(q, Rational(-2), Rational(2)) - (root_at_2 ? 1 : 0);

  if (cert.trace_root_at_pm2) {
    cert.reason = "trace polynomial vanishes at ±2";
    return cert;
  }
  if (cert.trace_real_roots != cert.half_degree) {
    cert.reason = "trace polynomial has non-real or repeated roots";
    return cert;
  }
  if (cert.trace_roots_above_2 != 1) {
    cert.reason = "trace polynomial has " + std::to_string(cert.trace_roots_above_2) + " roots above 2";
    return cert;
  }
  if (cert.trace_roots_inside != cert.half_degree - 1) {
    cert.reason = "trace polynomial has a root below -2";
    return cert;
  }
  // Roots of p above 1 correspond to the single trace root above 2.
  const Integer bound = cauchy_bound(p);
  auto roots = isolate_real_roots_in(p, Rational(1), Rational(bound));
  if (roots.size() != 1) {
    cert.reason = "expected exactly one real root above 1";
    return cert;
  }
  cert.root = roots.front();
  cert.is_salem = true;
  cert.reason = "ok";
  return cert;
}

std::string to_string(SpectralKind kind) {
  switch (kind) {
    case SpectralKind::AllCyclotomic:
      return "AllCyclotomic";
    case SpectralKind::SalemStructure:
      return "SalemStructure";
    case SpectralKind::NotSpectrallyValid:
      return "NotSpectrallyValid";
  }
  return "?";
}

IntPolynomial SalemClassification::reassemble() const {
  IntPolynomial p = remainder;
  for (const auto& f : cyclotomic_factors) p *= pow(cyclotomic(f.n), f.multiplicity);
  return p;
}

SalemClassification classify_charpoly(const IntPolynomial& p) {
  PeeledPolynomial peeled = peel_cyclotomic(p);
  SalemClassification c;
  c.cyclotomic_factors = std::move(peeled.factors);
  c.remainder = std::move(peeled.remainder);
  if (c.remainder.is_one()) {
    c.kind = SpectralKind::AllCyclotomic;
    return c;
  }
  if (c.remainder.degree() < 2) {
    c.kind = SpectralKind::NotSpectrallyValid;
    return c;
  }
  SalemCertificate cert = is_salem_polynomial(c.remainder);
  if (cert.is_salem) {
    c.kind = SpectralKind::SalemStructure;
    c.salem_factor = c.remainder;
    c.salem_root = cert.root;
  } else {
    c.kind = SpectralKind::NotSpectrallyValid;
  }
  c.certificate = std::move(cert);
  return c;
}

}  // namespace hkdd
