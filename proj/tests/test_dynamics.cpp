#include <doctest.h>

#include <cmath>
#include <set>

#include "hkdd/dynamics.hpp"
#include "hkdd/errors.hpp"
#include "oracles.hpp"

using namespace hkdd;

namespace {

const IntMatrix kM1M2{{45, 10, 16}, {-36, -7, -12}, {-8, -2, -3}};
const double kAlpha = 17.0 + 12.0 * std::sqrt(2.0);

GramLattice quartic_pair() { return make_lattice(IntMatrix{{4, 0, 8}, {0, -2, 0}, {8, 0, 4}}, {"H1", "e", "H2"}); }

std::vector<IntMatrix> brute_force_isometries(const GramLattice& l, long long bound) {
  const std::size_t r = l.rank();
  std::vector<IntMatrix> out;
  IntMatrix m(r, r);
  std::vector<long long> e(r * r, -bound);
  for (;;) {
    for (std::size_t i = 0; i < r * r; ++i) m(i / r, i % r) = e[i];
    if (m.transpose() * l.gram() * m == l.gram()) {
      const Integer d = determinant(m);
      if (d == 1 || d == -1) out.push_back(m);
    }
    std::size_t i = 0;
    while (i < e.size() && ++e[i] > bound) e[i++] = -bound;
    if (i == e.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("first dynamical degree of M1M2 matches float oracles") {
  const FirstDegree d = first_dynamical_degree(kM1M2);
  REQUIRE(d);
  CHECK(*d->closed_form() == "17+12*sqrt(2)");
  CHECK(d->to_double() == doctest::Approx(oracle::spectral_radius(kM1M2)).epsilon(1e-10));
  CHECK(d->to_double() == doctest::Approx(oracle::power_iteration(kM1M2)).epsilon(1e-9));
  CHECK(estimate_spectral_radius(kM1M2) == doctest::Approx(kAlpha).epsilon(1e-6));
  CHECK_FALSE(first_dynamical_degree(IntMatrix{{3, 2, 8}, {-4, -3, -8}, {0, 0, -1}}));
  CHECK_FALSE(first_dynamical_degree(IntMatrix::identity(4)));
}

TEST_CASE("first dynamical degree rejects non-Salem spectra with an estimate") {
  try {
    first_dynamical_degree(IntMatrix{{1, 1}, {1, 0}});
    FAIL("expected SpectralStructureViolated");
  } catch (const SpectralStructureViolated& e) {
    CHECK(e.spectral_radius_estimate == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-6));
  }
}

TEST_CASE("power_iterate_degree gives exact powers") {
  const AlgebraicReal a = *first_dynamical_degree(kM1M2);
  const AlgebraicReal a2 = power_iterate_degree(a, 2);
  CHECK(*a2.closed_form() == "577+408*sqrt(2)");
  CHECK(*power_iterate_degree(a, 3).closed_form() == "19601+13860*sqrt(2)");
  for (unsigned l = 1; l <= 5; ++l)
    CHECK(power_iterate_degree(a, l).to_double() == doctest::Approx(std::pow(kAlpha, l)).epsilon(1e-12));
  CHECK(power_iterate_degree(a, 0).exact_rational() == Rational(1));

  const IntPolynomial lehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
  const AlgebraicReal l = isolate_real_roots_in(lehmer, Rational(1), Rational(2)).front();
  const double lf = l.to_double();
  for (unsigned k = 1; k <= 6; ++k)
    CHECK(power_iterate_degree(l, k).to_double() == doctest::Approx(std::pow(lf, k)).epsilon(1e-12));
  CHECK(compare_reals(power_iterate_degree(l, 2), l) > 0);
  CHECK(compare_reals(l, l) == 0);
}

TEST_CASE("degree spectrum for the composite on S^[2]") {
  const DegreeSpectrum s = degree_spectrum(2, first_dynamical_degree(kM1M2));
  REQUIRE(s.entries.size() == 5);
  CHECK(s.entries[0].exact == "1");
  CHECK(s.entries[1].exact == "17+12*sqrt(2)");
  CHECK(s.entries[2].exact == "577+408*sqrt(2)");
  CHECK(s.entries[3].exact == "17+12*sqrt(2)");
  CHECK(s.entries[4].exact == "1");
  CHECK(s.entries[2].symbolic == "d1^2");
  CHECK(s.entries[2].approx == doctest::Approx(kAlpha * kAlpha).epsilon(1e-12));
  CHECK(s.entropy_exact == "2*log(17+12*sqrt(2))");
  CHECK(s.entropy_nats == doctest::Approx(2 * std::log(kAlpha)).epsilon(1e-12));
  CHECK(s.entropy_log10 == doctest::Approx(2 * std::log10(kAlpha)).epsilon(1e-12));
  CHECK(s.entropy_decimal == "7.05098869616");
  CHECK_THROWS_AS(degree_spectrum(0, std::nullopt), BadN);

  const DegreeSpectrum one = degree_spectrum(3, std::nullopt);
  for (const auto& e : one.entries) CHECK(e.exact == "1");
  CHECK(one.entropy_nats == 0.0);
  CHECK(one.entropy_exact == "0");
}

TEST_CASE("precision controls decimals") {
  const DegreeSpectrum s = degree_spectrum(1, first_dynamical_degree(kM1M2), 20);
  CHECK(s.entries[1].decimal == "33.970562748477140586");
  CHECK(s.entropy_decimal == "3.5254943480781721009");
}

TEST_CASE("iterate_degree") {
  const FirstDegree d = first_dynamical_degree(kM1M2);
  CHECK(iterate_degree(d, 2)->to_double() == doctest::Approx(kAlpha * kAlpha).epsilon(1e-12));
  CHECK_FALSE(iterate_degree(std::nullopt, 5));
  CHECK_FALSE(iterate_degree(d, 0));
}

TEST_CASE("validate_spectrum_shape flags each violation") {
  const std::vector<double> good{1, 3, 9, 3, 1};
  CHECK(validate_spectrum_shape(good).ok());
  const auto r = validate_spectrum_shape(good);
  CHECK(r.p == 2);
  CHECK(r.q == 2);

  const std::vector<double> flat{1, 1, 1};
  CHECK(validate_spectrum_shape(flat).ok());

  const std::vector<double> asym{1, 3, 9, 4, 1};
  CHECK_FALSE(validate_spectrum_shape(asym).symmetric);
  const std::vector<double> ends{2, 3, 2};
  CHECK_FALSE(validate_spectrum_shape(ends).endpoints_one);
  const std::vector<double> not_power{1, 3, 8, 3, 1};
  CHECK_FALSE(validate_spectrum_shape(not_power).power_law);
  const std::vector<double> concave_fail{1, 2, 5, 2, 1};
  const auto c = validate_spectrum_shape(concave_fail);
  CHECK_FALSE(c.log_concave);
  CHECK_FALSE(c.ok());
  const std::vector<double> dip{1, 3, 2, 3, 1};
  CHECK_FALSE(validate_spectrum_shape(dip).monotone);
  CHECK_FALSE(validate_spectrum_shape(std::vector<double>{}).ok());
}

TEST_CASE("spectra from the search catalogue satisfy the degree law") {
  const SearchResult cat = search_salem_isometries(quartic_pair(), 4, 2);
  REQUIRE_FALSE(cat.entries.empty());
  for (int trial = 0; trial < 60; ++trial) {
    const auto& e = cat.entries[static_cast<std::size_t>(oracle::uniform(0, static_cast<long long>(cat.entries.size()) - 1))];
    const unsigned n = static_cast<unsigned>(oracle::uniform(1, 5));
    const DegreeSpectrum s = degree_spectrum(n, e.root);
    const ShapeReport r = validate_spectrum_shape(s);
    CHECK(r.ok());
    CHECK(r.p == n);
    CHECK(r.q == n);
  }
}

TEST_CASE("symmetric powers") {
  CHECK(sym_power_dimension(23, 2) == 276);
  CHECK(sym_power_dimension(3, 2) == 6);
  CHECK(sym_power_dimension(4, 3) == 20);
  CHECK(sym_power_dimension(5, 0) == 1);
  CHECK(sym_power_matrix(IntMatrix::identity(4), 3) == IntMatrix::identity(20));
  CHECK(sym_power_matrix(kM1M2, 1) == kM1M2);

  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix a = oracle::random_matrix(3, 3, 3);
    const IntMatrix b = oracle::random_matrix(3, 3, 3);
    CHECK(sym_power_matrix(a * b, 2) == sym_power_matrix(a, 2) * sym_power_matrix(b, 2));
  }
  // The eigenvalues of Sym^2 are products of pairs: det = det(M)^(r+1).
  const IntMatrix a = oracle::random_matrix(3, 3, 4);
  CHECK(determinant(sym_power_matrix(a, 2)) == boost::multiprecision::pow(determinant(a), 4));

  const IntMatrix s2 = sym_power_matrix(kM1M2, 2);
  CHECK(s2.rows() == 6);
  CHECK(oracle::power_iteration(s2) == doctest::Approx(kAlpha * kAlpha).epsilon(1e-6));
}

TEST_CASE("multiplicity one on symmetric powers") {
  CHECK(multiplicity_one_check(kM1M2, 1));
  CHECK(multiplicity_one_check(kM1M2, 2));
  CHECK(multiplicity_one_check(kM1M2, 3));
  CHECK_THROWS_AS(multiplicity_one_check(IntMatrix::identity(3), 1), SpectralStructureViolated);
}

TEST_CASE("search agrees with brute force on small lattices") {
  const GramLattice hyp = make_lattice(IntMatrix{{2, 0}, {0, -2}});
  const auto brute = brute_force_isometries(hyp, 3);
  const SearchResult r = search_salem_isometries(hyp, 3, 1);
  CHECK(r.isometry_count == brute.size());

  const GramLattice l = quartic_pair();
  const auto brute3 = brute_force_isometries(l, 2);
  const SearchResult r3 = search_salem_isometries(l, 2, 3);
  CHECK(r3.isometry_count == brute3.size());
  std::size_t involutions = 0;
  for (const auto& m : brute3)
    if (m != IntMatrix::identity(3) && m * m == IntMatrix::identity(3)) ++involutions;
  CHECK(r3.involutions.size() == involutions);
}

TEST_CASE("search entries are sound, sorted and thread-independent") {
  const GramLattice l = quartic_pair();
  const SearchResult a = search_salem_isometries(l, 8, 1);
  const SearchResult b = search_salem_isometries(l, 8, 4);
  REQUIRE(a.entries.size() == b.entries.size());
  std::set<std::string> polys;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].matrix == b.entries[i].matrix);
    CHECK(a.entries[i].origin == b.entries[i].origin);
    CHECK_NOTHROW(verify_isometry(l, a.entries[i].matrix));
    CHECK(is_salem_polynomial(a.entries[i].salem_poly).is_salem);
    CHECK(char_poly(a.entries[i].matrix) == a.entries[i].char_poly);
    CHECK(polys.insert(a.entries[i].salem_poly.to_string()).second);
    if (i) CHECK(compare_reals(a.entries[i - 1].root, a.entries[i].root) < 0);
  }
  CHECK(a.involutions == b.involutions);
  bool has_alpha = false;
  for (const auto& e : a.entries) has_alpha = has_alpha || e.salem_poly == IntPolynomial{1, -34, 1};
  CHECK(has_alpha);
  const IntMatrix m1{{3, 2, 8}, {-4, -3, -8}, {0, 0, -1}};
  const IntMatrix m2{{-1, 0, 0}, {-8, -3, -4}, {8, 2, 3}};
  CHECK(std::find(a.involutions.begin(), a.involutions.end(), m1) != a.involutions.end());
  CHECK(std::find(a.involutions.begin(), a.involutions.end(), m2) != a.involutions.end());
}

TEST_CASE("search on a definite form finds no Salem isometries") {
  const SearchResult r = search_salem_isometries(make_lattice(IntMatrix{{1, 0}, {0, 1}}), 5, 2);
  CHECK(r.isometry_count == 8);
  CHECK(r.entries.empty());
}
