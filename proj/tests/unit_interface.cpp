#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "koszul/driver.hpp"
#include "koszul/errors.hpp"
#include "koszul/numbers.hpp"
#include "koszul/report.hpp"
#include "koszul/textio.hpp"

using namespace koszul;

namespace {

template <typename F>
std::optional<ErrorKind> thrown_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

std::filesystem::path write_temp(const std::string& stem,
                                 const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / (stem + ".txt");
  std::ofstream out(path);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("input text round-trips through the canonical printer") {
  const char* texts[] = {
      "ring t;",
      "ring a, b; ideal a*b;",
      "ring x1, x2, x3, x4; ideal x1^2*x3 - 2*x1*x2*x4, x2^3;",
      "ring x, y; module gens 0, 1; rel x^2, x; rel y^2, y;",
      "ring u, v; ideal u^2; module gens 0; rel v^3;",
  };
  for (const char* t : texts) {
    CAPTURE(t);
    ParsedInput p = parse_input(t);
    CHECK(parse_input(print_input(p)) == p);
  }
}

TEST_CASE("parse failures carry positions and the parse error kind") {
  auto k = thrown_kind([] { parse_input("ring x, y; ideal x^;"); });
  REQUIRE(k.has_value());
  CHECK(*k == ErrorKind::Parse);

  try {
    parse_input("ring x;\nideal z;");
    FAIL("unknown variable accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }

  auto mixed = thrown_kind([] { parse_input("ring x, y; ideal x^2 + y;"); });
  REQUIRE(mixed.has_value());
  CHECK(*mixed == ErrorKind::Parse);

  auto dup = thrown_kind([] { parse_input("ring x, x;"); });
  REQUIRE(dup.has_value());
  CHECK(*dup == ErrorKind::Parse);
}

TEST_CASE("report integers widen to decimal strings past 64 bits") {
  Json small = json_int(Int(-42));
  REQUIRE(small.is_number_integer());
  CHECK(small.get<long long>() == -42);

  Json wide = json_int(pow10(40));
  REQUIRE(wide.is_string());
  CHECK(wide.get<std::string>() == "1" + std::string(40, '0'));

  Json negwide = json_int(-pow10(40));
  REQUIRE(negwide.is_string());
  CHECK(negwide.get<std::string>() == "-1" + std::string(40, '0'));
}

TEST_CASE("json report layout is fixed and byte-stable") {
  auto build = [] {
    Report rep;
    rep.command = "demo";
    rep.parameters["n"] = 3;
    Json v = Json::object();
    v["value"] = json_int(pow10(25));
    rep.verdicts.push_back(v);
    rep.bounds["cap"] = 7;
    rep.line("one line");
    return rep.json_dump();
  };
  std::string a = build();
  CHECK(a == build());

  Json parsed = Json::parse(a);
  std::vector<std::string> keys;
  for (auto it = parsed.begin(); it != parsed.end(); ++it)
    keys.push_back(it.key());
  const std::vector<std::string> want = {
      "command",      "parameters",     "verdicts",      "certificates",
      "bounds",       "characteristic", "toolkitVersion"};
  CHECK(keys == want);
  CHECK(parsed["toolkitVersion"] == "0.1.0");
  CHECK(parsed["verdicts"][0]["value"].is_string());
  CHECK(a.back() == '\n');
}

TEST_CASE("driver computes veronese numerics") {
  JobSpec j;
  j.command = "veronese";
  j.args = {"7", "2"};
  Report r = run_job(j);
  REQUIRE(r.verdicts.size() >= 1);
  Json v = r.verdicts.at(0);
  CHECK(v["hPolynomial"] == Json::array({1, 21, 35, 7}));
  CHECK(v["multiplicity"] == 64);
  CHECK(v["embeddingDimension"] == 28);
  CHECK(v["dimension"] == 7);
  Json parsed = Json::parse(r.json_dump());
  CHECK(parsed["parameters"]["n"] == 7);
  CHECK(parsed["parameters"]["c"] == 2);
}

TEST_CASE("driver locates the first negative obstruction coefficient") {
  JobSpec j;
  j.command = "obstruction";
  j.options = {{"veronese", "6 7"}, {"order", "130"}};
  Report r = run_job(j);
  REQUIRE(r.verdicts.size() == 1);
  CHECK(r.verdicts.at(0)["verdict"] == "fail");
  CHECK(r.verdicts.at(0)["firstNegativeIndex"] == 121);
  CHECK(r.bounds["seriesOrder"] == 130);
}

TEST_CASE("driver splits a quadratic monomial ideal from an input file") {
  auto path = write_temp("koszul_iface_monomial",
                         "ring a, b, c, d;\nideal a^2, b^2, a*d, a*c, b*d;\n");
  JobSpec j;
  j.command = "monomial";
  j.options = {{"input", path.string()}};
  Report r = run_job(j);
  REQUIRE(r.verdicts.size() == 2);
  CHECK(r.verdicts.at(0)["quadratic"] == true);
  CHECK(r.verdicts.at(1)["splitCertificate"] == "found");
  REQUIRE(r.certificates.size() == 1);
  Json cert = r.certificates.at(0);
  CHECK(cert["ciPart"] == Json::array({"a^2", "b^2"}));
  CHECK(cert["chordal"] == true);
  CHECK(cert["eliminationOrder"].size() >= 4);
  std::filesystem::remove(path);
}

TEST_CASE("driver recognizes a base pattern from an input file") {
  auto path =
      write_temp("koszul_iface_uk", "ring x, y;\nideal x^2, y^2;\n");
  JobSpec j;
  j.command = "uk";
  j.options = {{"input", path.string()}};
  Report r = run_job(j);
  CHECK(r.verdicts.at(0)["recognized"] == true);
  REQUIRE(r.certificates.size() == 1);
  CHECK(r.certificates.at(0)["kind"] == "baseH");
  CHECK(r.certificates.at(0)["m"] == 2);
  std::filesystem::remove(path);
}

TEST_CASE("driver checks groebner bases from an input file") {
  auto path = write_temp("koszul_iface_gb",
                         "ring x, y, z;\nideal y^2 - x*z, z^2 - x*y;\n");
  JobSpec j;
  j.command = "gb";
  j.options = {{"input", path.string()}, {"cap", "8"}};
  Report r = run_job(j);
  CHECK(r.verdicts.at(0)["inputWasBasis"] == true);
  CHECK(r.verdicts.at(0)["basisSize"] == 2);
  std::filesystem::remove(path);
}

TEST_CASE("driver error kinds match the failure class") {
  auto usage = thrown_kind([] {
    JobSpec j;
    j.command = "no-such-command";
    run_job(j);
  });
  REQUIRE(usage.has_value());
  CHECK(*usage == ErrorKind::Usage);

  auto arity = thrown_kind([] {
    JobSpec j;
    j.command = "veronese";
    j.args = {"7"};
    run_job(j);
  });
  CHECK(arity == ErrorKind::Usage);

  auto notint = thrown_kind([] {
    JobSpec j;
    j.command = "veronese";
    j.args = {"7", "two"};
    run_job(j);
  });
  CHECK(notint == ErrorKind::Usage);

  auto nofile = thrown_kind([] {
    JobSpec j;
    j.command = "uk";
    run_job(j);
  });
  CHECK(nofile == ErrorKind::Usage);

  auto badchar = thrown_kind([] {
    auto path = write_temp("koszul_iface_badchar", "ring x; ideal x^2;");
    JobSpec j;
    j.command = "resolve";
    j.options = {{"input", path.string()}, {"char", "4"}};
    run_job(j);
  });
  CHECK(badchar == ErrorKind::Usage);

  auto badtext = thrown_kind([] {
    auto path = write_temp("koszul_iface_badtext", "ring x; ideal x +;");
    JobSpec j;
    j.command = "gb";
    j.options = {{"input", path.string()}};
    run_job(j);
  });
  CHECK(badtext == ErrorKind::Parse);

  auto capped = thrown_kind([] {
    // the basis completion needs degree 3, so a cap of 2 leaves the ring
    // certified only through degree 2 and the resolution window overruns it
    auto path = write_temp("koszul_iface_capped",
                           "ring x, y, z, w; ideal y^2 - x*z, y*z - x*w;");
    JobSpec j;
    j.command = "resolve";
    j.options = {{"input", path.string()},
                 {"cap", "2"},
                 {"hbound", "3"},
                 {"dbound", "6"}};
    run_job(j);
  });
  CHECK(capped == ErrorKind::BoundExceeded);
}
