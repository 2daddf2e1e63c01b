#include "hkdd/hyperkahler.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hkdd/intlinalg.hpp"

namespace hkdd {

HilbertLattice hilbert_lattice(const GramLattice& base, unsigned n, std::optional<std::size_t> e_index) {
  if (n < 2) throw BadN("Hilbert scheme needs n >= 2, got " + std::to_string(n));
  const std::size_t r = base.rank();
  const std::size_t e = e_index.value_or(r);
  if (e > r) throw InvalidArgument("e index out of range");

  HilbertLattice h{base, n, e, base};
  IntMatrix g(r + 1, r + 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) g(h.extended_index(i), h.extended_index(j)) = base.gram()(i, j);
  g(e, e) = 2 - 2 * static_cast<long long>(n);

  std::vector<std::string> labels(r + 1);
  for (std::size_t i = 0; i < r; ++i) labels[h.extended_index(i)] = base.label(i);
  labels[e] = "e";
  h.extended = make_lattice(std::move(g), std::move(labels));
  return h;
}

LatticeIsometry natural_isometry(const LatticeIsometry& g, const HilbertLattice& h) {
  if (!(g.lattice() == h.base)) throw LatticeMismatch("isometry does not act on the base lattice");
  const std::size_t r = h.base.rank();
  IntMatrix m(r + 1, r + 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(h.extended_index(i), h.extended_index(j)) = g.matrix()(i, j);
  m(h.e_index, h.e_index) = 1;
  return verify_isometry(h.extended, m);
}

namespace {

IntVector unit(std::size_t r, std::size_t i, long long scale = 1) {
  IntVector v(r);
  v[i] = scale;
  return v;
}

IntVector axpy(const IntVector& y, const Integer& t, const IntVector& k) {
  IntVector out = y;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += t * k[i];
  return out;
}

// Integer points y on {A y = c} with yᵀ G y = target.
std::vector<IntVector> solve_pairing_and_norm(const GramLattice& lat, const IntMatrix& a, const IntVector& c,
                                              const Integer& target, long long bound) {
  std::vector<IntVector> out;
  auto affine = solve_integer(a, c);
  if (!affine) return out;
  const IntVector& y0 = affine->particular;
  const auto& ks = affine->kernel;

  if (ks.empty()) {
    if (norm_of(lat, y0) == target) out.push_back(y0);
    return out;
  }
  if (ks.size() == 1) {
    // Q(y0 + t k) = A t² + B t + C.
    const IntVector& k = ks.front();
    const Integer qa = norm_of(lat, k);
    const Integer qb = 2 * lat.pairing(y0, k);
    const Integer qc = norm_of(lat, y0) - target;
    std::vector<Integer> ts;
    if (qa != 0) {
      const Integer disc = qb * qb - 4 * qa * qc;
      if (is_perfect_square(disc)) {
        const Integer s = isqrt(disc);
        for (const Integer& num : {Integer(-qb + s), Integer(-qb - s)})
          if (num % (2 * qa) == 0) ts.push_back(num / (2 * qa));
      }
    } else if (qb != 0) {
      if ((-qc) % qb == 0) ts.push_back(-qc / qb);
    }
    if (qa != 0 || qb != 0) {
      std::sort(ts.begin(), ts.end());
      ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
      for (const auto& t : ts) out.push_back(axpy(y0, t, k));
      return out;
    }
    // Degenerate: the norm is constant along the line; fall through to the bounded scan.
  }
  std::vector<Integer> t(ks.size(), -bound);
  for (;;) {
    IntVector y = y0;
    for (std::size_t i = 0; i < ks.size(); ++i) y = axpy(y, t[i], ks[i]);
    if (norm_of(lat, y) == target) out.push_back(std::move(y));
    std::size_t i = 0;
    while (i < t.size() && ++t[i] > bound) t[i++] = -bound;
    if (i == t.size()) break;
  }
  return out;
}

}  // namespace

BeauvilleResult beauville_involution(const HilbertLattice& h, std::size_t quartic_class,
                                     GeometricAssumptions assumptions, long long search_bound) {
  if (h.n != 2) throw BadN("the Beauville involution lives on S^[2]; got n = " + std::to_string(h.n));
  const GramLattice& lat = h.extended;
  const std::size_t r = lat.rank();
  const std::size_t e = h.e_index;
  if (quartic_class >= r || quartic_class == e) throw InvalidArgument("quartic class index must name a base vector");
  const IntMatrix& g = lat.gram();
  if (g(quartic_class, quartic_class) != 4)
    throw InvalidArgument("quartic class must have norm 4, got " + g(quartic_class, quartic_class).str());

  // ι*h = 3h - 4e, ι*e = 2h - 3e.
  IntVector img_h = unit(r, quartic_class, 3);
  img_h[e] = -4;
  IntVector img_e = unit(r, quartic_class, 2);
  img_e[e] = -3;

  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < r; ++i)
    if (i != quartic_class && i != e) others.push_back(i);

  IntMatrix a(2, r);
  const IntVector gh = g * img_h;
  const IntVector ge = g * img_e;
  for (std::size_t j = 0; j < r; ++j) {
    a(0, j) = gh[j];
    a(1, j) = ge[j];
  }
  std::vector<std::vector<IntVector>> per_class;
  for (std::size_t x : others) {
    const IntVector rhs{g(x, quartic_class), g(x, e)};
    per_class.push_back(solve_pairing_and_norm(lat, a, rhs, g(x, x), search_bound));
  }

  std::vector<BeauvilleCandidate> candidates;
  std::vector<IntVector> chosen;
  std::function<void(std::size_t)> combine = [&](std::size_t idx) {
    if (idx == others.size()) {
      BeauvilleCandidate cand;
      cand.matrix = IntMatrix(r, r);
      cand.matrix.set_column(quartic_class, img_h);
      cand.matrix.set_column(e, img_e);
      for (std::size_t i = 0; i < others.size(); ++i) {
        cand.matrix.set_column(others[i], chosen[i]);
        cand.images.emplace_back(others[i], chosen[i]);
      }
      candidates.push_back(std::move(cand));
      return;
    }
    for (const auto& y : per_class[idx]) {
      bool ok = true;
      for (std::size_t i = 0; i < idx && ok; ++i) ok = lat.pairing(chosen[i], y) == g(others[i], others[idx]);
      if (!ok) continue;
      chosen.push_back(y);
      combine(idx + 1);
      chosen.pop_back();
    }
  };
  combine(0);

  const IntMatrix id = IntMatrix::identity(r);
  std::vector<std::size_t> accepted;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    auto& cand = candidates[i];
    try {
      const LatticeIsometry iso = verify_isometry(lat, cand.matrix);
      cand.involution = cand.matrix * cand.matrix == id;
      cand.invariant_rank = invariant_sublattice(iso).size();
    } catch (const NotIsometry&) {
      cand.rejection = "not an isometry";
      continue;
    }
    if (!cand.involution) {
      cand.rejection = "does not square to the identity";
    } else if (cand.invariant_rank != 1) {
      cand.rejection = "invariant lattice has rank " + std::to_string(cand.invariant_rank) + ", expected 1";
    } else {
      cand.accepted = true;
      accepted.push_back(i);
    }
  }
  if (accepted.empty()) throw NoSolution("no integral involution satisfies the Beauville constraints");
  if (accepted.size() > 1)
    throw Ambiguous(std::to_string(accepted.size()) + " candidates survive every filter", candidates);

  const auto& winner = candidates[accepted.front()];
  LatticeIsometry iso = verify_isometry(lat, winner.matrix);
  std::vector<IntVector> inv = invariant_sublattice(iso);
  return BeauvilleResult{std::move(iso), std::move(candidates), std::move(inv), assumptions};
}

Sl2Matrix::Sl2Matrix(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const Integer det = a_ * d_ - b_ * c_;
  if (det != 1) throw NotUnimodular("ad - bc = " + det.str() + ", expected 1");
}

FirstDegree kummer_first_degree(const Sl2Matrix& m) {
  const Integer t = m.trace();
  if (abs(t) <= 2) return std::nullopt;
  // α² and β² are the roots of x² - (t² - 2)x + 1; the one above 1 is the degree.
  const IntPolynomial p(std::vector<Integer>{1, -(t * t - 2), 1});
  auto roots = isolate_real_roots_in(p, Rational(1), Rational(cauchy_bound(p)));
  return roots.front();
}

DegreeSpectrum kummer_spectrum(const Sl2Matrix& m, unsigned n, int precision) {
  if (n < 2) throw BadN("Hilbert scheme needs n >= 2, got " + std::to_string(n));
  return degree_spectrum(n, kummer_first_degree(m), precision);
}

std::string to_string(NaturalityVerdict v) {
  return v == NaturalityVerdict::NotNatural ? "NotNatural" : "PossiblyNatural";
}

NaturalityCertificate naturality_certificate(const LatticeIsometry& m, const HilbertLattice& h) {
  if (!(m.lattice() == h.extended)) throw LatticeMismatch("isometry does not act on the Hilbert lattice");
  const GramLattice& lat = h.extended;
  NaturalityCertificate cert;
  cert.required_norm = 2 - 2 * static_cast<long long>(h.n);
  cert.fixed_basis = invariant_sublattice(m);
  const Integer& target = cert.required_norm;
  std::ostringstream os;

  const IntVector e = unit(lat.rank(), h.e_index);
  if (m.matrix() * e == e) {
    cert.verdict = NaturalityVerdict::PossiblyNatural;
    cert.witness = std::pair{e, target};
    cert.explanation = "e itself is fixed with norm " + target.str();
    return cert;
  }
  if (cert.fixed_basis.empty()) {
    cert.verdict = NaturalityVerdict::NotNatural;
    cert.explanation = "no nonzero class is fixed";
    return cert;
  }
  if (cert.fixed_basis.size() == 1) {
    const IntVector& v = cert.fixed_basis.front();
    const Integer norm = norm_of(lat, v);
    cert.witness = std::pair{v, norm};
    // Fixed classes are k v with norm k² (v, v).
    const bool reachable = norm != 0 && target % norm == 0 && target / norm > 0 && is_perfect_square(target / norm);
    cert.verdict = reachable ? NaturalityVerdict::PossiblyNatural : NaturalityVerdict::NotNatural;
    os << "fixed class " << render_combination(lat, v) << " has norm " << norm << ", required " << target;
    cert.explanation = os.str();
    return cert;
  }
  const GramLattice fixed = restrict_to(lat, cert.fixed_basis);
  const RepresentResult rep = represents(fixed, target, 16);
  switch (rep.verdict) {
    case RepresentVerdict::FoundVector: {
      IntVector v(lat.rank());
      for (std::size_t i = 0; i < rep.vector.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += rep.vector[i] * cert.fixed_basis[i][j];
      cert.verdict = NaturalityVerdict::PossiblyNatural;
      os << "fixed class " << render_combination(lat, v) << " has the required norm " << target;
      cert.witness = std::pair{std::move(v), target};
      break;
    }
    case RepresentVerdict::CertifiedNo:
      cert.verdict = NaturalityVerdict::NotNatural;
      os << "fixed lattice of rank " << cert.fixed_basis.size() << " never has norm " << target << ": "
         << rep.certificate;
      break;
    case RepresentVerdict::NotFoundWithinBound:
      cert.verdict = NaturalityVerdict::PossiblyNatural;
      os << "no fixed class of norm " << target << " found within the search bound; undecided";
      break;
  }
  cert.explanation = os.str();
  return cert;
}

LatticeIsometry compose(const LatticeIsometry& a, const LatticeIsometry& b) {
  if (!(a.lattice() == b.lattice())) throw LatticeMismatch("cannot compose isometries of different lattices");
  return verify_isometry(a.lattice(), a.matrix() * b.matrix());
}

LatticeIsometry power(const LatticeIsometry& a, unsigned ell) {
  IntMatrix m = IntMatrix::identity(a.rank());
  IntMatrix base = a.matrix();
  while (ell) {
    if (ell & 1u) m = m * base;
    ell >>= 1u;
    if (ell) base = base * base;
  }
  return verify_isometry(a.lattice(), m);
}

LatticeIsometry inverse(const LatticeIsometry& a) {
  auto inv = integer_inverse(a.matrix());
  if (!inv) throw NotIsometry(0, 0, determinant(a.matrix()), Integer(1));
  return verify_isometry(a.lattice(), *inv);
}

namespace fixtures {

GramLattice quartic_pair_lattice() { return make_lattice(IntMatrix{{4, 8}, {8, 4}}, {"H1", "H2"}); }

HilbertLattice quartic_pair_hilbert() { return hilbert_lattice(quartic_pair_lattice(), 2, 1); }

IntMatrix m1() { return IntMatrix{{3, 2, 8}, {-4, -3, -8}, {0, 0, -1}}; }
IntMatrix m2() { return IntMatrix{{-1, 0, 0}, {-8, -3, -4}, {8, 2, 3}}; }
IntMatrix m1m2() { return IntMatrix{{45, 10, 16}, {-36, -7, -12}, {-8, -2, -3}}; }

std::vector<std::pair<long long, Sl2Matrix>> sl2_by_trace() {
  return {
      {-3, Sl2Matrix(-2, -1, -1, -1)}, {-2, Sl2Matrix(-1, 0, 0, -1)}, {0, Sl2Matrix(0, -1, 1, 0)},
      {1, Sl2Matrix(1, -1, 1, 0)},     {2, Sl2Matrix(1, 1, 0, 1)},    {3, Sl2Matrix(2, 1, 1, 1)},
      {4, Sl2Matrix(3, 1, 2, 1)},      {6, Sl2Matrix(5, 2, 2, 1)},
  };
}

}  // namespace fixtures

}  // namespace hkdd
