#include <doctest.h>

#include <cmath>

#include "hkdd/errors.hpp"
#include "hkdd/salem.hpp"
#include "oracles.hpp"

using namespace hkdd;

namespace {

const IntPolynomial kLehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};

// One root outside the unit circle, its inverse inside, the rest on it.
bool salem_root_pattern(const IntPolynomial& p, double tol) {
  int outside = 0, inside = 0, on = 0;
  for (const auto& z : oracle::roots(p)) {
    const double r = std::abs(z);
    if (std::abs(r - 1.0) <= tol) ++on;
    else if (r > 1.0) ++outside;
    else ++inside;
  }
  return outside == 1 && inside == 1 && on == p.degree() - 2;
}

}  // namespace

TEST_CASE("Salem polynomials are accepted") {
  const auto a = is_salem_polynomial(IntPolynomial{1, -34, 1});
  CHECK(a.is_salem);
  REQUIRE(a.root);
  CHECK(a.root->decimal(14) == "33.970562748477");
  CHECK(salem_root_pattern(IntPolynomial{1, -34, 1}, 1e-6));

  const auto l = is_salem_polynomial(kLehmer);
  CHECK(l.is_salem);
  REQUIRE(l.root);
  CHECK(l.root->decimal(6) == "1.17628");
  CHECK(l.trace_roots_above_2 == 1);
  CHECK(l.trace_roots_inside == 4);
  CHECK(salem_root_pattern(kLehmer, 1e-6));
}

TEST_CASE("non-Salem inputs are rejected with a reason") {
  for (unsigned n = 3; n <= 30; ++n) {
    const auto c = is_salem_polynomial(cyclotomic(n));
    CHECK_FALSE(c.is_salem);
  }
  CHECK(is_salem_polynomial(IntPolynomial{-1, 0, 1}).reason == "not palindromic");
  CHECK(is_salem_polynomial(IntPolynomial{1, -3, 0, 1}).reason == "not palindromic");
  CHECK(is_salem_polynomial(IntPolynomial{1, 1, 1, 1}).reason == "odd degree");
  // (x^2 - 3x + 1)^2 has a repeated trace root.
  CHECK_FALSE(is_salem_polynomial(pow(IntPolynomial{1, -3, 1}, 2)).is_salem);
  // Two roots off the circle on each side.
  CHECK_FALSE(is_salem_polynomial(IntPolynomial{1, -3, 1} * IntPolynomial{1, -4, 1}).is_salem);
  CHECK_THROWS_AS(is_salem_polynomial(IntPolynomial{-1, 1}), DegreeTooSmall);
  CHECK_THROWS_AS(is_salem_polynomial(IntPolynomial{1, -34, 2}), NotMonic);
}

TEST_CASE("peel_cyclotomic") {
  const IntPolynomial p = pow(cyclotomic(1), 2) * cyclotomic(12) * IntPolynomial{1, -34, 1};
  const auto peeled = peel_cyclotomic(p);
  REQUIRE(peeled.factors.size() == 2);
  CHECK(peeled.factors[0] == CyclotomicFactor{1, 2});
  CHECK(peeled.factors[1] == CyclotomicFactor{12, 1});
  CHECK(peeled.remainder == IntPolynomial{1, -34, 1});
  CHECK_THROWS_AS(peel_cyclotomic(IntPolynomial{1, 2}), NotMonic);
}

TEST_CASE("classification and reassembly") {
  const auto c = classify_charpoly(IntPolynomial{-1, 35, -35, 1});
  CHECK(c.kind == SpectralKind::SalemStructure);
  REQUIRE(c.salem_factor);
  CHECK(*c.salem_factor == IntPolynomial{1, -34, 1});
  CHECK(c.cyclotomic_factors == std::vector<CyclotomicFactor>{{1, 1}});
  CHECK(c.reassemble() == IntPolynomial{-1, 35, -35, 1});

  const auto cyc = classify_charpoly(IntPolynomial{-1, -1, 1, 1});
  CHECK(cyc.kind == SpectralKind::AllCyclotomic);
  CHECK(cyc.cyclotomic_factors == std::vector<CyclotomicFactor>{{1, 1}, {2, 2}});

  CHECK(classify_charpoly(IntPolynomial{-1, -1, 0, 1}).kind == SpectralKind::NotSpectrallyValid);
  CHECK(classify_charpoly(IntPolynomial{2, 1}).kind == SpectralKind::NotSpectrallyValid);
  CHECK(to_string(SpectralKind::SalemStructure) == "SalemStructure");
}

TEST_CASE("classification reassembles random products") {
  const std::vector<IntPolynomial> salem{IntPolynomial{1, -3, 1}, IntPolynomial{1, -34, 1}, kLehmer};
  for (int trial = 0; trial < 40; ++trial) {
    IntPolynomial p{1};
    const int k = static_cast<int>(oracle::uniform(0, 3));
    for (int i = 0; i < k; ++i) p *= cyclotomic(static_cast<unsigned>(oracle::uniform(1, 20)));
    const bool with_salem = oracle::uniform(0, 1) == 1;
    if (with_salem) p *= salem[static_cast<std::size_t>(oracle::uniform(0, 2))];
    if (p.degree() < 1) continue;
    const auto c = classify_charpoly(p);
    CHECK(c.reassemble() == p);
    CHECK(c.kind == (with_salem ? SpectralKind::SalemStructure : SpectralKind::AllCyclotomic));
  }
}

TEST_CASE("every accepted palindromic quartic shows the float root pattern") {
  int accepted = 0;
  for (long long a = -6; a <= 6; ++a)
    for (long long b = -10; b <= 10; ++b) {
      const IntPolynomial p{1, a, b, a, 1};
      const auto c = is_salem_polynomial(p);
      if (!c.is_salem) continue;
      ++accepted;
      CHECK(salem_root_pattern(p, 1e-6));
    }
  CHECK(accepted > 0);
}
