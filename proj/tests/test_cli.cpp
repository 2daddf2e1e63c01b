#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "hkdd/json_io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hkdd::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(HKDD_FIXTURE_DIR) + "/" + name; }

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("degrees on the composite") {
  const Run r = run({"degrees", "--lattice", fixture("quartic_pair.json"), "--isometry", fixture("m1m2.json"),
                     "--half-dim", "2", "--precision", "7"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(contains(r.out, "SalemStructure"));
  CHECK(contains(r.out, "577+408√2"));
  const std::string last = r.out.substr(r.out.rfind("entropy"));
  CHECK(last.rfind("entropy = 2·log(17+12√2) ≈ 7.050989 nats", 0) == 0);
}

TEST_CASE("degrees on an involution and the identity") {
  const Run r = run({"degrees", "--lattice", fixture("quartic_pair.json"), "--isometry", fixture("m1.json"),
                     "--half-dim", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "AllCyclotomic"));
  CHECK(contains(r.out, "entropy = 0 "));
  const Run id = run({"degrees", "--lattice", fixture("quartic_pair.json"), "--isometry", fixture("identity3.json"),
                      "--half-dim", "3", "--format", "json"});
  CHECK(id.code == 0);
  const hkdd::Json j = hkdd::parse_json(id.out);
  CHECK(j["spectrum"]["degrees"].size() == 7);
  for (const auto& d : j["spectrum"]["degrees"]) CHECK(d["exact"] == "1");
}

TEST_CASE("exit codes") {
  CHECK(run({"degrees", "--lattice", fixture("missing.json"), "--isometry", fixture("m1.json")}).code == 2);
  CHECK(run({"degrees", "--lattice", fixture("quartic_pair.json"), "--isometry", fixture("quartic_pair.json")}).code == 2);
  const Run bad = run({"degrees", "--lattice", fixture("quartic_pair_base.json"), "--isometry", fixture("swap_bad.json")});
  CHECK(bad.code == 3);
  CHECK(contains(bad.err, "not an isometry"));
  CHECK(bad.out.empty());
  const Run spectral = run({"degrees", "--lattice", fixture("fibonacci_form.json"), "--isometry", fixture("fibonacci.json")});
  CHECK(spectral.code == 4);
  CHECK(contains(spectral.err, "spectral radius estimate"));
  CHECK(run({"salem-check", "1", "2"}).code == 2);
  CHECK(run({"salem-check", "1", "x"}).code == 2);
  CHECK(run({"kummer", "2", "1", "1", "2"}).code == 3);
  CHECK(run({"kummer", "2", "1", "1", "1", "--precision", "2"}).code == 2);
  CHECK(run({"kummer", "2", "1", "1", "1", "--format", "xml"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("salem-check") {
  const Run a = run({"salem-check", "1", "-34", "1"});
  CHECK(a.code == 0);
  CHECK(contains(a.out, "SalemStructure"));
  CHECK(contains(a.out, "33.9705627485"));
  const Run quoted = run({"salem-check", "1 -34 1", "--precision", "14"});
  CHECK(contains(quoted.out, "33.970562748477"));
  const Run lehmer = run({"salem-check", "1", "1", "0", "-1", "-1", "-1", "-1", "-1", "0", "1", "1"});
  CHECK(contains(lehmer.out, "1.17628"));
  const Run cyc = run({"salem-check", "-1", "0", "1"});
  CHECK(contains(cyc.out, "AllCyclotomic"));
  CHECK(contains(cyc.out, "Φ1 · Φ2"));
  const Run j = run({"salem-check", "1,-34,1", "--format", "json"});
  CHECK(hkdd::parse_json(j.out)["classification"]["kind"] == "SalemStructure");
}

TEST_CASE("kummer") {
  const Run r = run({"kummer", "2", "1", "1", "1", "--half-dim", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "trace           3"));
  CHECK(contains(r.out, "t > 2"));
  CHECK(contains(r.out, "6.85410196625"));
  const Run neg = run({"kummer", "-2", "-1", "-1", "-1"});
  CHECK(contains(neg.out, "t < -2"));
  CHECK(contains(neg.out, "6.85410196625"));
  const Run flat = run({"kummer", "1", "1", "0", "1", "--half-dim", "5", "--format", "json"});
  const hkdd::Json j = hkdd::parse_json(flat.out);
  CHECK(j["spectrum"]["degrees"].size() == 11);
  CHECK(j["spectrum"]["entropy"]["nats"] == "0");
  const Run id = run({"kummer", "1", "0", "0", "1"});
  CHECK(contains(id.out, "|t| <= 2"));
}

TEST_CASE("beauville-demo") {
  const Run r = run({"beauville-demo"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "(8, -8, -1) = 8H1 - 8e - H2  chosen"));
  CHECK(contains(r.out, "(4, -8, 1) = 4H1 - 8e + H2  rejected: invariant lattice has rank 2"));
  CHECK(contains(r.out, "M1 = [[3, 2, 8], [-4, -3, -8], [0, 0, -1]]"));
  CHECK(contains(r.out, "M2 = [[-1, 0, 0], [-8, -3, -4], [8, 2, 3]]"));
  CHECK(contains(r.out, "x^3 - 35*x^2 + 35*x - 1"));
  CHECK(contains(r.out, "Φ1 · Salem(x^2 - 34*x + 1)"));
  CHECK(contains(r.out, "g^3 on S^[2]"));
  CHECK(contains(r.out, "NotNatural: fixed class H1 - 6e + H2 has norm -48, required -2"));
  const Run j = run({"beauville-demo", "--format", "json"});
  CHECK(hkdd::dump(hkdd::parse_json(j.out)) == j.out);
}

TEST_CASE("natural-check") {
  const Run r = run({"natural-check", "--lattice", fixture("quartic_pair.json"), "--isometry", fixture("m1m2.json")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "NotNatural: fixed class H1 - 6e + H2 has norm -48, required -2"));
  const Run id = run({"natural-check", "--lattice", fixture("quartic_pair.json"), "--isometry",
                      fixture("identity3.json"), "--format", "json"});
  CHECK(hkdd::parse_json(id.out)["verdict"] == "PossiblyNatural");
  CHECK(run({"natural-check", "--lattice", fixture("quartic_pair.json"), "--isometry", fixture("m1m2.json"),
             "--half-dim", "3"})
            .code == 2);
  CHECK(run({"natural-check", "--lattice", fixture("quartic_pair_base.json"), "--isometry", fixture("m1m2.json")})
            .code == 2);
}

TEST_CASE("search output is identical across thread counts") {
  const std::vector<std::string> base{"search", "--lattice", fixture("quartic_pair.json"), "--bound", "8"};
  auto with = [&](const std::string& threads, const std::string& format) {
    auto a = base;
    a.insert(a.end(), {"--threads", threads, "--format", format});
    return run(a);
  };
  const Run one = with("1", "table");
  CHECK(one.code == 0);
  CHECK(one.out == with("4", "table").out);
  CHECK(one.out == with("1", "table").out);
  CHECK(contains(one.out, "33.9705627485"));
  const Run j1 = with("1", "json");
  CHECK(j1.out == with("3", "json").out);
  CHECK(hkdd::dump(hkdd::parse_json(j1.out)) == j1.out);

  const Run empty = run({"search", "--lattice", fixture("identity_form.json"), "--bound", "3"});
  CHECK(contains(empty.out, "salem entries   0"));
}

TEST_CASE("lattice-info") {
  const Run r = run({"lattice-info", "--lattice", fixture("quartic_pair_base.json")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "even            yes"));
  CHECK(contains(r.out, "signature       (1, 1)"));
  CHECK(contains(r.out, "represents -2   CertifiedNo"));
  CHECK(contains(r.out, "discriminant 192"));
  const Run j = run({"lattice-info", "--lattice", fixture("quartic_pair_base.json"), "--value", "4", "--format", "json"});
  const hkdd::Json p = hkdd::parse_json(j.out);
  CHECK(p["represents"][0]["verdict"] == "FoundVector");
  CHECK(p["determinant"] == -48);
}
