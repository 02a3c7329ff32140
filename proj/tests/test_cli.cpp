#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "operadiq/cli.hpp"

using namespace operadiq;
using namespace operadiq::cli;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Tri verdict(const RunReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c.verdict;
  FAIL("no record " << name);
  return Tri::Unknown;
}

Options with(const Manifest& m) {
  Options o;
  o.manifest = &m;
  o.caps = m.caps;
  o.seed = m.seed;
  return o;
}

}  // namespace

TEST_CASE("counterexample report matches the golden file") {
  RunReport r = cmd_counterexample(Options{});
  CHECK(format_text(r) == slurp("tests/golden/counterexample.txt"));
  CHECK(r.exit_code() == 0);
}

TEST_CASE("corrupting Phi turns the counterexample into a failure") {
  Options o;
  o.corrupt_phi = true;
  RunReport r = cmd_counterexample(o);
  CHECK(verdict(r, "phi-infty-morphism") == Tri::Fail);
  CHECK(r.exit_code() == 1);
}

TEST_CASE("counterexample below its caps is unknown") {
  Options o;
  o.caps.weight = 2;
  RunReport r = cmd_counterexample(o);
  CHECK(r.count(Tri::Fail) == 0);
  CHECK(r.count(Tri::Unknown) > 0);
  CHECK(r.exit_code() == 0);
}

TEST_CASE("manifest round trip") {
  const std::string text = slurp("tests/data/sample.manifest");
  Manifest m = parse_manifest(text);
  CHECK(m.caps.arity == 4);
  CHECK(m.caps.dmin == -4);
  CHECK(m.seed == 7);
  CHECK(m.objects.size() == 13);
  const std::string printed = print_manifest(m);
  Manifest again = parse_manifest(printed);
  CHECK(again == m);
  CHECK(print_manifest(again) == printed);
  REQUIRE(m.find("ab") != nullptr);
  CHECK(m.find("ab")->body[1].back() == "1");
}

TEST_CASE("manifest schema errors") {
  const std::string head = "operadiq-manifest 1\n";
  CHECK_THROWS_AS(parse_manifest(""), UsageError);
  CHECK_THROWS_AS(parse_manifest("operadiq-manifest 2\n"), UsageError);
  CHECK_THROWS_AS(parse_manifest(head + "caps arity 0\n"), UsageError);
  CHECK_THROWS_AS(parse_manifest(head + "caps window 3 1\n"), UsageError);
  CHECK_THROWS_AS(parse_manifest(head + "object X widget\nend\n"), UsageError);
  CHECK_THROWS_AS(parse_manifest(head + "object X complex\n basis a\nend\n"), UsageError);
  CHECK_THROWS_AS(parse_manifest(head + "object X complex\n basis a 0\n"), UsageError);
  CHECK_THROWS_AS(parse_manifest(head + "object X complex\nend\nobject X complex\nend\n"), UsageError);
  CHECK_THROWS_AS(parse_manifest(head + "object X complex\n d a b one\nend\n"), UsageError);
  CHECK_THROWS_AS(parse_manifest(head + "object X complex\n entry a b 1\nend\n"), UsageError);
  CHECK_NOTHROW(parse_manifest(head + "# comment\nobject X complex # trailing\nend\n"));
}

TEST_CASE("manifest objects that do not type check are usage errors") {
  Manifest m = parse_manifest(
      "operadiq-manifest 1\n"
      "object C complex\n basis a 0\n basis b 0\n d a b 1\nend\n");
  Options o = with(m);
  CHECK_THROWS_AS(cmd_check("dsq", {"C"}, o), UsageError);
  CHECK_THROWS_AS(cmd_check("dsq", {"nowhere"}, o), UsageError);
  CHECK_THROWS_AS(cmd_check("bogus", {"A2"}, Options{}), UsageError);
  CHECK_THROWS_AS(cmd_induce("left", "Phi", "V", Options{}), UsageError);
}

TEST_CASE("filtrations and MC forms from a manifest") {
  Manifest m = load_manifest("tests/data/sample.manifest");
  Options o = with(m);
  RunReport f = cmd_check("filtration", {"Fn3", "Fbad"}, o);
  CHECK(verdict(f, "filtration:Fn3") == Tri::Pass);
  CHECK(verdict(f, "filtration:Fbad") == Tri::Fail);

  RunReport mc = cmd_check("mc-simplex", {"pt", "ab", "path"}, o);
  CHECK(verdict(mc, "mc-simplex:pt") == Tri::Pass);
  CHECK(verdict(mc, "mc-simplex:path") == Tri::Pass);
  CHECK(verdict(mc, "mc-simplex:ab") == Tri::Fail);

  o.level = 2;
  CHECK(verdict(cmd_check("mc-simplex", {"ab"}, o), "mc-simplex:ab") == Tri::Pass);

  CHECK(verdict(cmd_check("linf-relations", {"n3"}, o), "linf-relations:n3") == Tri::Pass);
}

TEST_CASE("check kinds on fixtures") {
  Options o;
  CHECK(cmd_check("twisting", {"kappa", "iota_Com", "iota_As"}, o).count(Tri::Pass) == 3);
  CHECK(verdict(cmd_check("dsq", {"bar(kappa, A2)"}, o), "dsq:bar(kappa, A2)") == Tri::Pass);
  CHECK(verdict(cmd_check("infty", {"Phi"}, o), "infty:Phi") == Tri::Pass);
}

TEST_CASE("transfer along manifest contractions") {
  Manifest m = load_manifest("tests/data/sample.manifest");
  Options o = with(m);
  RunReport good = cmd_transfer("R", "good", o);
  CHECK(good.exit_code() == 0);
  bool saw_i2 = false;
  for (const auto& p : good.payload) saw_i2 |= p.find("i2(x,x) = y") != std::string::npos;
  CHECK(saw_i2);

  RunReport broken = cmd_transfer("R", "broken", o);
  CHECK(verdict(broken, "contraction") == Tri::Fail);
  CHECK(broken.exit_code() == 1);

  Options small;
  small.caps.arity = 3;
  CHECK(cmd_transfer("A2", "identity", small).exit_code() == 0);
}

TEST_CASE("induced morphisms") {
  Options o;
  CHECK(cmd_induce("left", "Phi", "A2", o).exit_code() == 0);
  CHECK(cmd_induce("right", "i_inf", "V", o).exit_code() == 0);
}

TEST_CASE("suite verdicts do not depend on the seed") {
  Options a, b;
  b.seed = 12345;
  RunReport ra = cmd_suite("all", a), rb = cmd_suite("all", b);
  REQUIRE(ra.checks.size() == 12);
  REQUIRE(rb.checks.size() == 12);
  for (std::size_t i = 0; i < ra.checks.size(); ++i) {
    CHECK(ra.checks[i].name == rb.checks[i].name);
    CHECK(ra.checks[i].verdict == Tri::Pass);
    CHECK(rb.checks[i].verdict == Tri::Pass);
  }
  CHECK(cmd_suite("signs", a).checks.size() == 2);
  CHECK_THROWS_AS(cmd_suite("nope", a), UsageError);
}

TEST_CASE("low caps give unknown, never fail") {
  Options o;
  o.caps.arity = 3;
  RunReport r = cmd_suite("all", o);
  CHECK(r.count(Tri::Fail) == 0);
  CHECK(r.count(Tri::Unknown) > 0);
  CHECK(r.exit_code() == 0);
}

TEST_CASE("reports are deterministic") {
  RunReport a = cmd_check("twisting", {"kappa"}, Options{});
  RunReport b = cmd_check("twisting", {"kappa"}, Options{});
  CHECK(format_text(a) == format_text(b));
  CHECK(digest_of("") == "cbf29ce484222325");
  CHECK(digest_of("a") == "af63dc4c8601ec8c");
  auto j = nlohmann::json::parse(format_structured(a));
  CHECK(j["checks"][0]["verdict"] == "PASS");
  CHECK(j["exit"] == 0);
}
