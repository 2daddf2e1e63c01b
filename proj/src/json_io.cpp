#include "hkdd/json_io.hpp"

#include <fstream>
#include <sstream>

#include "hkdd/errors.hpp"

namespace hkdd {

namespace {

const Integer kSafeLimit = Integer(1) << 53;

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  return Rational(integer_from_json(j));
}

}  // namespace

Json integer_to_json(const Integer& z) {
  if (abs(z) < kSafeLimit) return Json(z.convert_to<long long>());
  return Json(z.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long long>()) : Integer(j.get<long long>());
  if (j.is_number_float()) {
    const double d = j.get<double>();
    if (d != static_cast<double>(static_cast<long long>(d))) throw ParseError("expected an integer, got " + j.dump());
    return Integer(static_cast<long long>(d));
  }
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const InvalidArgument&) {
      throw ParseError("expected an integer, got " + j.dump());
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a list of rows");
  std::vector<IntVector> rows;
  for (const auto& r : j) {
    rows.push_back(vector_from_json(r));
    if (rows.back().size() != rows.front().size()) throw ParseError("matrix rows have different lengths");
  }
  return IntMatrix(rows);
}

Json to_json(const GramLattice& lattice) {
  Json out;
  Json labels = Json::array();
  for (std::size_t i = 0; i < lattice.rank(); ++i) labels.push_back(lattice.label(i));
  out["labels"] = std::move(labels);
  out["gram"] = to_json(lattice.gram());
  return out;
}

GramLattice lattice_from_json(const Json& j) {
  IntMatrix gram = matrix_from_json(member(j, "gram"));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw ParseError("\"labels\" must be an array of strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw ParseError("\"labels\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return make_lattice(std::move(gram), std::move(labels));
}

Json to_json(const LatticeIsometry& isometry) {
  Json out;
  out["matrix"] = to_json(isometry.matrix());
  return out;
}

IntMatrix isometry_matrix_from_json(const Json& j) {
  return matrix_from_json(j.is_object() ? member(j, "matrix") : j);
}

Json to_json(const IntPolynomial& p) { return to_json(p.coeffs()); }

IntPolynomial polynomial_from_json(const Json& j) { return IntPolynomial(vector_from_json(j)); }

Json to_json(const AlgebraicReal& a, int precision) {
  Json out;
  out["poly"] = to_json(a.poly());
  out["lo"] = to_string(a.lo());
  out["hi"] = to_string(a.hi());
  out["decimal"] = a.decimal(precision);
  return out;
}

AlgebraicReal algebraic_real_from_json(const Json& j) {
  const IntPolynomial p = polynomial_from_json(member(j, "poly"));
  return AlgebraicReal::isolate(p, rational_from_json(member(j, "lo")), rational_from_json(member(j, "hi")));
}

Json to_json(const SalemClassification& c, int precision) {
  Json out;
  out["kind"] = to_string(c.kind);
  Json cyc = Json::array();
  for (const auto& f : c.cyclotomic_factors) cyc.push_back(Json::array({f.n, f.multiplicity}));
  out["cyclotomic"] = std::move(cyc);
  out["salem_poly"] = c.salem_factor ? to_json(*c.salem_factor) : Json(nullptr);
  out["salem_root"] = c.salem_root ? to_json(*c.salem_root, precision) : Json(nullptr);
  return out;
}

Json to_json(const DegreeSpectrum& s) {
  Json out;
  out["half_dim"] = s.half_dim;
  out["d1"] = s.d1 ? to_json(*s.d1, s.precision) : Json("1");
  Json degrees = Json::array();
  for (const auto& e : s.entries) {
    Json d;
    d["k"] = e.k;
    d["symbolic"] = e.symbolic;
    d["exact"] = e.exact;
    d["decimal"] = e.decimal;
    degrees.push_back(std::move(d));
  }
  out["degrees"] = std::move(degrees);
  Json h;
  h["exact"] = s.entropy_exact;
  h["nats"] = s.entropy_decimal;
  h["log10"] = s.entropy_log10_decimal;
  out["entropy"] = std::move(h);
  out["precision"] = s.precision;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

}  // namespace hkdd
