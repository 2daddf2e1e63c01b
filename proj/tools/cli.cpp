#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hkdd/dynamics.hpp"
#include "hkdd/errors.hpp"
#include "hkdd/hyperkahler.hpp"
#include "hkdd/json_io.hpp"
#include "hkdd/lattice.hpp"
#include "hkdd/polynomial.hpp"
#include "hkdd/salem.hpp"

namespace hkdd::cli {

namespace {

struct Options {
  std::string format = "table";
  int precision = 12;
  unsigned half_dim = 1;
  unsigned bound = 4;
  unsigned represent_bound = 16;
  unsigned threads = 0;
  std::string lattice_file;
  std::string isometry_file;
  std::string e_label = "e";
  std::vector<std::string> tokens;
  std::vector<long long> values;
  bool half_dim_given = false;
};

bool json_mode(const Options& o) { return o.format == "json"; }

// Display width in code points.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const {
    std::vector<std::size_t> w(header_.size(), 0);
    auto widen = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], width(r[i]));
    };
    widen(header_);
    for (const auto& r : rows_) widen(r);
    auto line = [&](const std::vector<std::string>& r) {
      std::string s;
      for (std::size_t i = 0; i < r.size(); ++i) {
        s += r[i];
        if (i + 1 < r.size()) s += std::string(w[i] - width(r[i]) + 2, ' ');
      }
      s.erase(s.find_last_not_of(' ') + 1);
      out << s << "\n";
    };
    line(header_);
    for (const auto& r : rows_) line(r);
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

void field(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(16) << key << value << "\n";
}

// "2*log(17+12*sqrt(2))" -> "2·log(17+12√2)"
std::string pretty(std::string s) {
  for (std::size_t p; (p = s.find("*sqrt(")) != std::string::npos;) {
    const std::size_t close = s.find(')', p);
    s = s.substr(0, p) + "√" + s.substr(p + 6, close - p - 6) + s.substr(close + 1);
  }
  for (std::size_t p; (p = s.find("*log(")) != std::string::npos;) s.replace(p, 1, "·");
  return s;
}

std::string factor_string(const SalemClassification& c) {
  std::vector<std::string> parts;
  for (const auto& f : c.cyclotomic_factors)
    parts.push_back("Φ" + std::to_string(f.n) + (f.multiplicity > 1 ? "^" + std::to_string(f.multiplicity) : ""));
  if (c.salem_factor) parts.push_back("Salem(" + c.salem_factor->to_string() + ")");
  else if (!c.remainder.is_one()) parts.push_back("(" + c.remainder.to_string() + ")");
  if (parts.empty()) return "1";
  std::string s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) s += " · " + parts[i];
  return s;
}

void print_spectrum(std::ostream& out, const DegreeSpectrum& s) {
  Table t({"k", "d_k", "exact", "decimal"});
  for (const auto& e : s.entries) t.add({std::to_string(e.k), e.symbolic, pretty(e.exact), e.decimal});
  t.print(out);
  out << "entropy = " << pretty(s.entropy_exact) << " ≈ " << s.entropy_decimal << " nats ("
      << s.entropy_log10_decimal << " log10)\n";
}

IntPolynomial parse_coefficients(const std::vector<std::string>& tokens) {
  IntVector coeffs;
  for (const auto& tok : tokens) {
    std::string t = tok;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream in(t);
    for (std::string word; in >> word;) coeffs.push_back(integer_from_json(Json(word)));
  }
  if (coeffs.empty()) throw ParseError("no coefficients given");
  return IntPolynomial(std::move(coeffs));
}

GramLattice load_lattice(const std::string& path) { return lattice_from_json(read_json_file(path)); }

LatticeIsometry load_isometry(const GramLattice& lattice, const std::string& path) {
  return verify_isometry(lattice, isometry_matrix_from_json(read_json_file(path)));
}

std::string lattice_summary(const GramLattice& l) {
  std::string labels;
  for (std::size_t i = 0; i < l.rank(); ++i) labels += (i ? ", " : "") + l.label(i);
  const Signature s = signature(l);
  return "rank " + std::to_string(l.rank()) + " (" + labels + "), signature (" + std::to_string(s.positive) + ", " +
         std::to_string(s.negative) + ")";
}

// ---- degrees ----

int cmd_degrees(const Options& o, std::ostream& out) {
  const GramLattice lattice = load_lattice(o.lattice_file);
  const LatticeIsometry iso = load_isometry(lattice, o.isometry_file);
  const IntPolynomial cp = char_poly(iso.matrix());
  const SalemClassification cls = classify_charpoly(cp);
  const FirstDegree d1 = first_dynamical_degree(iso);
  const DegreeSpectrum s = degree_spectrum(o.half_dim, d1, o.precision);

  if (json_mode(o)) {
    Json j;
    j["lattice"] = to_json(lattice);
    j["matrix"] = to_json(iso.matrix());
    j["char_poly"] = to_json(cp);
    j["classification"] = to_json(cls, o.precision);
    j["spectrum"] = to_json(s);
    out << dump(j);
    return kOk;
  }
  field(out, "lattice", lattice_summary(lattice));
  field(out, "char poly", cp.to_string());
  field(out, "structure", to_string(cls.kind) + ": " + factor_string(cls));
  field(out, "d1", d1 ? pretty(d1->describe()) + " ≈ " + d1->decimal(o.precision) : "1");
  field(out, "half dim", std::to_string(o.half_dim));
  out << "\n";
  print_spectrum(out, s);
  return kOk;
}

// ---- salem-check ----

int cmd_salem_check(const Options& o, std::ostream& out) {
  const IntPolynomial p = parse_coefficients(o.tokens);
  const SalemClassification c = classify_charpoly(p);
  if (json_mode(o)) {
    Json j;
    j["poly"] = to_json(p);
    j["classification"] = to_json(c, o.precision);
    if (c.certificate) {
      Json cert;
      cert["is_salem"] = c.certificate->is_salem;
      cert["reason"] = c.certificate->reason;
      j["certificate"] = std::move(cert);
    }
    out << dump(j);
    return kOk;
  }
  field(out, "polynomial", p.to_string());
  field(out, "classification", to_string(c.kind));
  field(out, "factors", factor_string(c));
  if (c.salem_root) {
    const auto closed = c.salem_root->closed_form();
    field(out, "salem root", c.salem_root->decimal(o.precision) + (closed ? " (" + pretty(*closed) + ")" : ""));
    field(out, "interval", "(" + to_string(c.salem_root->lo()) + ", " + to_string(c.salem_root->hi()) + "]");
  } else if (c.certificate) {
    field(out, "reason", c.certificate->reason);
  } else if (c.kind == SpectralKind::NotSpectrallyValid) {
    field(out, "reason", "remainder " + c.remainder.to_string() + " has degree below 2");
  }
  return kOk;
}

// ---- kummer ----

int cmd_kummer(const Options& o, std::ostream& out) {
  if (o.tokens.size() != 4) throw ParseError("kummer needs four entries a b c d");
  std::vector<Integer> e;
  for (const auto& t : o.tokens) e.push_back(integer_from_json(Json(t)));
  const Sl2Matrix m(e[0], e[1], e[2], e[3]);
  const Integer t = m.trace();
  const IntPolynomial q(std::vector<Integer>{1, -(t * t - 2), 1});
  std::string branch;
  if (abs(t) <= 2) branch = "|t| <= 2: every degree is 1";
  else branch = std::string(t > 2 ? "t > 2" : "t < -2") + ": d1 is the root > 1 of " + q.to_string();
  const unsigned n = o.half_dim_given ? o.half_dim : 2;
  const DegreeSpectrum s = kummer_spectrum(m, n, o.precision);

  if (json_mode(o)) {
    Json j;
    j["matrix"] = Json::array({Json::array({integer_to_json(m.a()), integer_to_json(m.b())}),
                               Json::array({integer_to_json(m.c()), integer_to_json(m.d())})});
    j["trace"] = integer_to_json(t);
    j["case"] = branch;
    j["spectrum"] = to_json(s);
    out << dump(j);
    return kOk;
  }
  field(out, "matrix", "[[" + m.a().str() + ", " + m.b().str() + "], [" + m.c().str() + ", " + m.d().str() + "]]");
  field(out, "trace", t.str());
  field(out, "case", branch);
  field(out, "half dim", std::to_string(n));
  out << "\n";
  print_spectrum(out, s);
  return kOk;
}

// ---- beauville-demo ----

int cmd_beauville_demo(const Options& o, std::ostream& out) {
  const HilbertLattice h = fixtures::quartic_pair_hilbert();
  const GramLattice& lat = h.extended;
  const GeometricAssumptions assume{true, true};
  const std::size_t h1 = *lat.find_label("H1");
  const std::size_t h2 = *lat.find_label("H2");

  const BeauvilleResult r1 = beauville_involution(h, h1, assume);
  const BeauvilleResult r2 = beauville_involution(h, h2, assume);
  const LatticeIsometry g = compose(r1.isometry, r2.isometry);
  const IntPolynomial cp = char_poly(g.matrix());
  const SalemClassification cls = classify_charpoly(cp);
  const NaturalityCertificate nat = naturality_certificate(g, h);

  std::vector<DegreeSpectrum> spectra;
  for (unsigned ell = 1; ell <= 3; ++ell)
    spectra.push_back(degree_spectrum(2, first_dynamical_degree(power(g, ell)), o.precision));

  if (json_mode(o)) {
    Json j;
    j["lattice"] = to_json(lat);
    Json invs = Json::array();
    for (const auto* r : {&r1, &r2}) {
      Json ji;
      ji["h"] = r == &r1 ? "H1" : "H2";
      Json cands = Json::array();
      for (const auto& c : r->candidates) {
        Json jc;
        Json images = Json::array();
        for (const auto& [idx, v] : c.images) images.push_back(Json{{"class", lat.label(idx)}, {"image", to_json(v)}});
        jc["images"] = std::move(images);
        jc["accepted"] = c.accepted;
        jc["rejection"] = c.rejection;
        cands.push_back(std::move(jc));
      }
      ji["candidates"] = std::move(cands);
      ji["matrix"] = to_json(r->isometry.matrix());
      invs.push_back(std::move(ji));
    }
    j["involutions"] = std::move(invs);
    j["composite"] = Json{{"matrix", to_json(g.matrix())},
                          {"char_poly", to_json(cp)},
                          {"classification", to_json(cls, o.precision)}};
    Json js = Json::array();
    for (unsigned ell = 1; ell <= spectra.size(); ++ell)
      js.push_back(Json{{"ell", ell}, {"spectrum", to_json(spectra[ell - 1])}});
    j["spectra"] = std::move(js);
    Json jn;
    jn["verdict"] = to_string(nat.verdict);
    jn["required_norm"] = integer_to_json(nat.required_norm);
    if (nat.witness) jn["witness"] = Json{{"vector", to_json(nat.witness->first)}, {"norm", integer_to_json(nat.witness->second)}};
    jn["explanation"] = nat.explanation;
    j["naturality"] = std::move(jn);
    out << dump(j);
    return kOk;
  }

  field(out, "lattice", lattice_summary(lat));
  field(out, "gram", to_string(lat.gram()));
  field(out, "assumptions", "quartic without lines, norm-4 class very ample");
  for (const auto* r : {&r1, &r2}) {
    const std::size_t hi = r == &r1 ? h1 : h2;
    const std::string name = r == &r1 ? "M1" : "M2";
    out << "\ninvolution for h = " << lat.label(hi) << ": ι*h = 3h - 4e, ι*e = 2h - 3e\n";
    for (const auto& c : r->candidates) {
      for (const auto& [idx, v] : c.images)
        out << "  image of " << lat.label(idx) << " = " << to_string(v) << " = " << render_combination(lat, v);
      out << "  " << (c.accepted ? "chosen" : "rejected: " + c.rejection) << "\n";
    }
    out << "  " << name << " = " << to_string(r->isometry.matrix()) << "\n";
  }
  out << "\ncomposite M1M2 = " << to_string(g.matrix()) << "\n";
  field(out, "char poly", cp.to_string());
  field(out, "structure", to_string(cls.kind) + ": " + factor_string(cls));
  for (unsigned ell = 1; ell <= spectra.size(); ++ell) {
    out << "\ng^" << ell << " on S^[2]\n";
    print_spectrum(out, spectra[ell - 1]);
  }
  out << "\n" << to_string(nat.verdict) << ": " << nat.explanation << "\n";
  return kOk;
}

// ---- natural-check ----

HilbertLattice hilbert_from_extended(const GramLattice& ext, const Options& o) {
  const auto e = ext.find_label(o.e_label);
  if (!e) throw ParseError("lattice has no basis vector labelled \"" + o.e_label + "\"");
  const IntMatrix& g = ext.gram();
  for (std::size_t i = 0; i < ext.rank(); ++i)
    if (i != *e && g(i, *e) != 0) throw ParseError(o.e_label + " is not orthogonal to " + ext.label(i));
  const Integer ee = g(*e, *e);
  if (ee > 0 || ee % 2 != 0) throw ParseError("(e, e) = " + ee.str() + " is not of the form -2n + 2");
  const unsigned n = static_cast<unsigned>((2 - ee) / 2);
  if (n < 2) throw ParseError("(e, e) = " + ee.str() + " gives n < 2");
  if (o.half_dim_given && o.half_dim != n)
    throw ParseError("--half-dim " + std::to_string(o.half_dim) + " disagrees with (e, e) = " + ee.str());

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < ext.rank(); ++i)
    if (i != *e) keep.push_back(i);
  IntMatrix bg(keep.size(), keep.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    labels.push_back(ext.label(keep[i]));
    for (std::size_t j = 0; j < keep.size(); ++j) bg(i, j) = g(keep[i], keep[j]);
  }
  HilbertLattice h = hilbert_lattice(make_lattice(std::move(bg), std::move(labels)), n, *e);
  h.extended = ext;
  return h;
}

int cmd_natural_check(const Options& o, std::ostream& out) {
  const GramLattice ext = load_lattice(o.lattice_file);
  const HilbertLattice h = hilbert_from_extended(ext, o);
  const LatticeIsometry iso = load_isometry(ext, o.isometry_file);
  const NaturalityCertificate c = naturality_certificate(iso, h);
  if (json_mode(o)) {
    Json j;
    j["verdict"] = to_string(c.verdict);
    j["required_norm"] = integer_to_json(c.required_norm);
    Json basis = Json::array();
    for (const auto& v : c.fixed_basis) basis.push_back(to_json(v));
    j["fixed_basis"] = std::move(basis);
    j["witness"] = c.witness ? Json{{"vector", to_json(c.witness->first)}, {"norm", integer_to_json(c.witness->second)}}
                             : Json(nullptr);
    j["explanation"] = c.explanation;
    out << dump(j);
    return kOk;
  }
  std::string basis;
  for (const auto& v : c.fixed_basis) basis += (basis.empty() ? "" : ", ") + render_combination(ext, v);
  field(out, "fixed lattice", "rank " + std::to_string(c.fixed_basis.size()) + (basis.empty() ? "" : ": " + basis));
  field(out, "required norm", c.required_norm.str());
  out << to_string(c.verdict) << ": " << c.explanation << "\n";
  return kOk;
}

// ---- search ----

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  const GramLattice lattice = load_lattice(o.lattice_file);
  if (lattice.rank() > 4) err << "warning: rank " << lattice.rank() << " search may take a long time\n";
  const SearchResult r = search_salem_isometries(lattice, o.bound, o.threads);
  const Rational small(13, 10);

  if (json_mode(o)) {
    Json j;
    j["bound"] = o.bound;
    j["isometries"] = r.isometry_count;
    Json invs = Json::array();
    for (const auto& m : r.involutions) invs.push_back(to_json(m));
    j["involutions"] = std::move(invs);
    j["products_examined"] = r.products_examined;
    Json entries = Json::array();
    for (const auto& e : r.entries) {
      Json je;
      je["root"] = to_json(e.root, o.precision);
      je["salem_poly"] = to_json(e.salem_poly);
      je["char_poly"] = to_json(e.char_poly);
      je["origin"] = e.origin;
      je["matrix"] = to_json(e.matrix);
      je["small_salem_candidate"] = e.root.compare(small) < 0;
      entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    out << dump(j);
    return kOk;
  }
  field(out, "lattice", lattice_summary(lattice));
  field(out, "entry bound", std::to_string(o.bound));
  field(out, "isometries", std::to_string(r.isometry_count) + " (" + std::to_string(r.involutions.size()) +
                               " involutions, " + std::to_string(r.products_examined) + " products examined)");
  field(out, "salem entries", std::to_string(r.entries.size()));
  if (r.entries.empty()) return kOk;
  out << "\n";
  Table t({"#", "root", "salem polynomial", "origin", "matrix", "note"});
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    const auto& e = r.entries[i];
    t.add({std::to_string(i + 1), e.root.decimal(o.precision), e.salem_poly.to_string(), e.origin,
           to_string(e.matrix), e.root.compare(small) < 0 ? "small Salem candidate" : ""});
  }
  t.print(out);
  return kOk;
}

// ---- lattice-info ----

int cmd_lattice_info(const Options& o, std::ostream& out) {
  const GramLattice lattice = load_lattice(o.lattice_file);
  const Signature sig = signature(lattice);
  std::vector<long long> values = o.values.empty() ? std::vector<long long>{-2, 0} : o.values;
  std::vector<RepresentResult> reps;
  for (long long v : values) reps.push_back(represents(lattice, Integer(v), o.represent_bound));

  if (json_mode(o)) {
    Json j = to_json(lattice);
    j["rank"] = lattice.rank();
    j["determinant"] = integer_to_json(determinant(lattice.gram()));
    j["even"] = is_even(lattice);
    j["signature"] = Json{{"positive", sig.positive}, {"negative", sig.negative}, {"zero", sig.zero}};
    Json jr = Json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
      Json x;
      x["value"] = values[i];
      x["verdict"] = to_string(reps[i].verdict);
      x["vector"] = reps[i].verdict == RepresentVerdict::FoundVector ? to_json(reps[i].vector) : Json(nullptr);
      x["certificate"] = reps[i].certificate;
      jr.push_back(std::move(x));
    }
    j["represents"] = std::move(jr);
    out << dump(j);
    return kOk;
  }
  field(out, "lattice", lattice_summary(lattice));
  field(out, "gram", to_string(lattice.gram()));
  field(out, "determinant", determinant(lattice.gram()).str());
  field(out, "even", is_even(lattice) ? "yes" : "no");
  field(out, "signature", "(" + std::to_string(sig.positive) + ", " + std::to_string(sig.negative) +
                              "), radical rank " + std::to_string(sig.zero));
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::string detail;
    if (reps[i].verdict == RepresentVerdict::FoundVector)
      detail = to_string(reps[i].vector) + " = " + render_combination(lattice, reps[i].vector);
    else if (reps[i].verdict == RepresentVerdict::CertifiedNo)
      detail = reps[i].certificate;
    else
      detail = "no vector with coordinates in [-" + std::to_string(o.represent_bound) + ", " +
               std::to_string(o.represent_bound) + "]";
    field(out, "represents " + std::to_string(values[i]), to_string(reps[i].verdict) + ": " + detail);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Dynamical degrees and entropy of hyperkähler automorphisms from lattice isometries", "hkdd"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}))->capture_default_str();
    sub->add_option("--precision", o.precision, "significant digits")->check(CLI::Range(3, 40))->capture_default_str();
  };
  auto half_dim = [&](CLI::App* sub) {
    sub->add_option_function<unsigned>(
           "--half-dim",
           [&](unsigned n) {
             o.half_dim = n;
             o.half_dim_given = true;
           },
           "n, for a manifold of dimension 2n")
        ->check(CLI::PositiveNumber);
  };

  auto* degrees = app.add_subcommand("degrees", "Degree spectrum and entropy of an isometry");
  degrees->add_option("--lattice", o.lattice_file, "lattice JSON")->required();
  degrees->add_option("--isometry", o.isometry_file, "isometry JSON")->required();
  half_dim(degrees);
  common(degrees);

  auto* salem = app.add_subcommand("salem-check", "Classify a polynomial (coefficients constant term first)");
  salem->add_option("coefficients", o.tokens, "e.g. 1 -34 1 for x^2 - 34x + 1")->required();
  common(salem);

  auto* kummer = app.add_subcommand("kummer", "Spectrum on the Hilbert scheme of a Kummer surface from [[a, b], [c, d]]");
  kummer->add_option("entries", o.tokens, "a b c d")->required()->expected(4);
  half_dim(kummer);
  common(kummer);

  auto* demo = app.add_subcommand("beauville-demo", "Beauville involutions on two quartics and their composite");
  common(demo);

  auto* natural = app.add_subcommand("natural-check", "Test for a fixed class of norm -2n + 2");
  natural->add_option("--lattice", o.lattice_file, "lattice JSON including e")->required();
  natural->add_option("--isometry", o.isometry_file, "isometry JSON")->required();
  natural->add_option("--e-label", o.e_label, "label of e")->capture_default_str();
  half_dim(natural);
  common(natural);

  auto* search = app.add_subcommand("search", "Isometries with small entries whose spectrum has a Salem factor");
  search->add_option("--lattice", o.lattice_file, "lattice JSON")->required();
  search->add_option("--bound", o.bound, "largest absolute matrix entry")->capture_default_str();
  search->add_option("--threads", o.threads, "worker count; 0 reads HKDD_THREADS");
  common(search);

  auto* info = app.add_subcommand("lattice-info", "Parity, signature and represented values");
  info->add_option("--lattice", o.lattice_file, "lattice JSON")->required();
  info->add_option("--value", o.values, "values to test (default -2 and 0)");
  info->add_option("--bound", o.represent_bound, "coordinate bound for the witness search")->capture_default_str();
  common(info);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }
  try {
    if (degrees->parsed()) return cmd_degrees(o, out);
    if (salem->parsed()) return cmd_salem_check(o, out);
    if (kummer->parsed()) return cmd_kummer(o, out);
    if (demo->parsed()) return cmd_beauville_demo(o, out);
    if (natural->parsed()) return cmd_natural_check(o, out);
    if (search->parsed()) return cmd_search(o, out, err);
    if (info->parsed()) return cmd_lattice_info(o, out);
  } catch (const NotIsometry& e) {
    err << "error: " << e.what() << "\n";
    return kNotIsometry;
  } catch (const NotUnimodular& e) {
    err << "error: " << e.what() << "\n";
    return kNotIsometry;
  } catch (const SpectralStructureViolated& e) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", e.spectral_radius_estimate);
    err << "error: " << e.what() << "\nspectral radius estimate ≈ " << buf << "\n";
    return kSpectralFailure;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const NotMonic& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    const bool input = dynamic_cast<const NonSquare*>(&e) || dynamic_cast<const NonSymmetric*>(&e) ||
                       dynamic_cast<const DimensionMismatch*>(&e) || dynamic_cast<const ZeroPolynomial*>(&e) ||
                       dynamic_cast<const BadN*>(&e) || dynamic_cast<const LatticeMismatch*>(&e) ||
                       dynamic_cast<const InvalidArgument*>(&e);
    err << "error: " << e.what() << "\n";
    return input ? kParseError : kFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace hkdd::cli
