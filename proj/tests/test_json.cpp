#include <doctest.h>

#include "hkdd/errors.hpp"
#include "hkdd/hyperkahler.hpp"
#include "hkdd/json_io.hpp"

using namespace hkdd;

TEST_CASE("integers switch to strings beyond 53 bits") {
  CHECK(integer_to_json(Integer(-48)) == Json(-48));
  const Integer limit = (Integer(1) << 53) - 1;
  CHECK(integer_to_json(limit).is_number());
  CHECK(integer_to_json(limit + 1).is_string());
  const Integer big("123456789012345678901234567890");
  CHECK(integer_from_json(integer_to_json(big)) == big);
  CHECK(integer_from_json(integer_to_json(-big)) == -big);
  CHECK(integer_from_json(Json("-7")) == -7);
  CHECK(integer_from_json(Json("010")) == 10);
  CHECK(integer_from_json(Json("+5")) == 5);
  CHECK_THROWS_AS(integer_from_json(Json("0x10")), ParseError);
  CHECK(integer_from_json(Json(3.0)) == 3);
  CHECK_THROWS_AS(integer_from_json(Json(2.5)), ParseError);
  CHECK_THROWS_AS(integer_from_json(Json("12a")), ParseError);
  CHECK_THROWS_AS(integer_from_json(Json("-")), ParseError);
  CHECK_THROWS_AS(integer_from_json(Json(true)), ParseError);
}

TEST_CASE("lattice round trip") {
  const GramLattice l = fixtures::quartic_pair_hilbert().extended;
  const Json j = to_json(l);
  CHECK(dump(j) == dump(parse_json(dump(j))));
  const GramLattice back = lattice_from_json(j);
  CHECK(back == l);
  CHECK(back.labels() == l.labels());
  CHECK(j.dump() == R"({"labels":["H1","e","H2"],"gram":[[4,0,8],[0,-2,0],[8,0,4]]})");

  CHECK_THROWS_AS(lattice_from_json(parse_json(R"({"labels": []})")), ParseError);
  CHECK_THROWS_AS(lattice_from_json(parse_json(R"({"gram": [[1, 2], [3]]})")), ParseError);
  CHECK_THROWS_AS(lattice_from_json(parse_json(R"({"gram": [[1, 2], [3, 1]]})")), NonSymmetric);
  CHECK_THROWS_AS(parse_json("{"), ParseError);
  CHECK(lattice_from_json(parse_json(R"({"gram": [[2]]})")).label(0) == "v1");
}

TEST_CASE("isometry, polynomial and algebraic real round trips") {
  const LatticeIsometry g = verify_isometry(fixtures::quartic_pair_hilbert().extended, fixtures::m1m2());
  CHECK(isometry_matrix_from_json(to_json(g)) == g.matrix());
  CHECK(isometry_matrix_from_json(to_json(g.matrix())) == g.matrix());

  const IntPolynomial p{1, -34, 1};
  CHECK(to_json(p).dump() == "[1,-34,1]");
  CHECK(polynomial_from_json(to_json(p)) == p);

  const AlgebraicReal a = AlgebraicReal::isolate(p, Rational(1), Rational(35));
  const Json ja = to_json(a);
  CHECK(ja["lo"] == "1");
  CHECK(ja["hi"] == "35");
  CHECK(ja["decimal"] == "33.9705627485");
  const AlgebraicReal back = algebraic_real_from_json(ja);
  CHECK(back.same_root(a));
  CHECK_THROWS(algebraic_real_from_json(parse_json(R"({"poly": [1, -34, 1], "lo": "0", "hi": "40"})")));

  const AlgebraicReal fine = a.refine(Rational(1, 1000));
  const Json jf = to_json(fine);
  CHECK(jf["lo"].get<std::string>().find('/') != std::string::npos);
  CHECK(algebraic_real_from_json(jf).same_root(a));
}

TEST_CASE("classification JSON") {
  const Json j = to_json(classify_charpoly(IntPolynomial{-1, 35, -35, 1}));
  CHECK(j["kind"] == "SalemStructure");
  CHECK(j["cyclotomic"].dump() == "[[1,1]]");
  CHECK(j["salem_poly"].dump() == "[1,-34,1]");
  CHECK(j["salem_root"]["decimal"] == "33.9705627485");
  const Json c = to_json(classify_charpoly(IntPolynomial{-1, 0, 1}));
  CHECK(c["kind"] == "AllCyclotomic");
  CHECK(c["salem_poly"].is_null());
}

TEST_CASE("spectrum JSON re-renders byte for byte") {
  const HilbertLattice h = fixtures::quartic_pair_hilbert();
  const DegreeSpectrum s =
      degree_spectrum(2, first_dynamical_degree(verify_isometry(h.extended, fixtures::m1m2())), 12);
  const std::string text = dump(to_json(s));
  CHECK(dump(parse_json(text)) == text);
  const Json j = parse_json(text);
  CHECK(j["degrees"][2]["exact"] == "577+408*sqrt(2)");
  CHECK(j["entropy"]["nats"] == "7.05098869616");
  CHECK(j["entropy"]["exact"] == "2*log(17+12*sqrt(2))");
}
