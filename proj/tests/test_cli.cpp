#include <sstream>

#include "doctest.h"
#include "ncalg/catalog.hpp"
#include "ncalg/cli.hpp"
#include "ncalg/errors.hpp"
#include "ncalg/format.hpp"

using namespace ncalg;

namespace {

const std::string kData = NCALG_TEST_DATA_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ncalg");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool same_rules(const RewriteSystem& a, const RewriteSystem& b) {
  if (a.rules.size() != b.rules.size()) return false;
  for (std::size_t i = 0; i < a.rules.size(); ++i)
    if (a.rules[i].lead != b.rules[i].lead || a.rules[i].tail != b.rules[i].tail) return false;
  return true;
}

const CheckRecord* find(const RunReport& r, const std::string& id) {
  for (auto& c : r.checks)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("presentation files round-trip") {
  for (auto& id : family_ids()) {
    for (bool numeric : {false, true}) {
      CAPTURE(id);
      CAPTURE(numeric);
      std::map<std::string, std::string> params;
      if (numeric)
        for (auto& k : family_parameters(id)) params[k] = k == "q" ? "3" : k == "h" ? "5" : "2";
      Presentation p = family_from_strings(id, params);
      PresentationFile f = parse_presentation_file(write_presentation(p));
      CHECK(f.presentation.name == p.name);
      CHECK(same_relations(f.presentation, p));
      CHECK(same_rules(complete(f.presentation, 6).system, complete(p, 6).system));
    }
  }
}

TEST_CASE("presentation file parse errors carry positions") {
  try {
    read_presentation_file(kData + "/bad_coefficient.json");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 12);
    CHECK(std::string(e.what()).find("coefficient") != std::string::npos);
  }
  try {
    parse_presentation_file("{\n  \"format\": 1,\n  \"generators\": [\n}", "inline");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).rfind("inline:4:", 0) == 0);
  }
  CHECK_THROWS_AS(parse_presentation_file(R"({"format": 2, "generators": [], "relations": []})"), InputError);
  CHECK_THROWS_AS(parse_presentation_file(R"({"format": 1, "relations": []})"), InputError);
  CHECK_THROWS_AS(parse_presentation_file(
                      R"({"format": 1, "generators": [{"name": "x", "bidegree": [1, 0]}],
                          "relations": [[{"coefficient": "1", "word": ["y"]}]]})"),
                  InputError);
}

TEST_CASE("constraints and matrices in files") {
  std::string text = R"({"format": 1, "name": "E1",
    "generators": [{"name": "x1", "bidegree": [1, 0]}, {"name": "x2", "bidegree": [1, 0]}],
    "algebraic_constraints": [{"symbol": "g", "minimal_polynomial": "g^2 + 1"}],
    "relations": [[{"coefficient": "1", "word": ["x2", "x1"]}, {"coefficient": "-g", "word": ["x1", "x2"]}]],
    "matrices": {"d2": {"entries": [["x1"]], "row_shifts": [-1], "col_shifts": [0]}},
    "claims": [{"tag": "t", "map": ["x1", "x2"]}]})";
  PresentationFile f = parse_presentation_file(text);
  CHECK(f.presentation.parameters == std::vector<std::string>{"g"});
  CHECK(f.presentation.ctx != nullptr);
  REQUIRE(f.d2.has_value());
  CHECK_FALSE(f.d3.has_value());
  REQUIRE(f.claims.size() == 1);
  PresentationFile again = parse_presentation_file(write_presentation(f.presentation));
  CHECK(same_relations(again.presentation, f.presentation));
}

TEST_CASE("polynomial ring file") {
  RunOptions o;
  RunReport r = cmd_check(kData + "/poly3.json", o);
  CHECK(r.exit_code() == 0);
  auto* n = find(r, "normal.degree1");
  REQUIRE(n != nullptr);
  CHECK(n->details.find("x1") != std::string::npos);
  auto* h = find(r, "hilbert.total");
  REQUIRE(h != nullptr);
  CHECK(h->status == Status::Pass);
  Presentation p = read_presentation_file(kData + "/poly3.json").presentation;
  CHECK(cmd_hilbert(p, std::string("1/(1-t)^3"), o).exit_code() == 0);
  CHECK(cmd_hilbert(p, std::string("1/((1-t)^3*(1-t^2))"), o).exit_code() == 1);
}

TEST_CASE("a longhand file reproduces the family report") {
  RunOptions o;
  RunReport file = cmd_check(kData + "/a_2_3.json", o);
  RunReport fam = cmd_verify_family("A", {{"b", "2"}, {"q", "3"}}, o);
  REQUIRE(file.checks.size() <= fam.checks.size());
  for (std::size_t i = 0; i < file.checks.size(); ++i) {
    CHECK(file.checks[i].id == fam.checks[i].id);
    CHECK(file.checks[i].status == fam.checks[i].status);
    CHECK(file.checks[i].details == fam.checks[i].details);
  }
}

TEST_CASE("candidate series") {
  auto s = candidate_series(family("A"), false);
  REQUIRE(s.has_value());
  CoeffTable t = expand(*s, 6), want = expand(standard_series(), 6);
  for (int n = 0; n <= 6; ++n) CHECK(t.at(n) == want.at(n));
  Presentation free2 = make_presentation("two", {"x2*x1 - x1*x2"}, {});
  CHECK_FALSE(candidate_series(free2, false).has_value());
}

TEST_CASE("exit codes") {
  CHECK(run({"verify-family", "--name", "A", "--b", "2", "--q", "3", "--bound", "6"}).code == 0);
  Run bad = run({"verify-family", "--name", "A", "--b", "0", "--q", "3"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("b != 0") != std::string::npos);
  CHECK(run({"verify-family", "--name", "A", "--b", "2"}).code == 2);
  CHECK(run({"verify-family", "--name", "Q", "--b", "2"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--bound", "x", "classify", "--case", "TL"}).code == 2);
  CHECK(run({"classify", "--case", "S32"}).code == 0);
  CHECK(run({"classify", "--case", "THzero"}).code == 0);
  CHECK(run({"check", kData + "/bad_coefficient.json"}).code == 2);
  CHECK(run({"iso", "--tag", "3.13.2"}).code == 1);
  CHECK(run({"iso", "--tag", "3.13.2-corrected"}).code == 0);
  CHECK(run({"--budget", "5", "classify", "--case", "TK"}).code == 3);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("reports are deterministic") {
  std::vector<std::string> args = {"--seed", "4", "--json", "ncalg_report.json", "classify", "--case", "TL"};
  Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  Run c = run({"--jobs", "4", "--seed", "4", "--json", "ncalg_report.json", "classify", "--case", "TL"});
  CHECK(c.out == a.out);
  Run d = run({"--symbolic", "--bound", "5", "verify-family", "--name", "F"}), e = run({"--symbolic", "--bound", "5", "verify-family", "--name", "F"});
  CHECK(d.code == 0);
  CHECK(d.out == e.out);
  std::remove("ncalg_report.json");
}

TEST_CASE("json report") {
  RunReport r;
  r.command = "x";
  r.input_digest = digest("x");
  r.checks.push_back({"a", Status::Pass, "ok", 0.5});
  r.checks.push_back({"b", Status::Unknown, "?", 0.5});
  CHECK(r.exit_code() == 3);
  std::string j = r.json();
  CHECK(j.find("\"UNKNOWN\"") != std::string::npos);
  CHECK(j.find("wall_time") == std::string::npos);
  CHECK(r.json(true).find("wall_time") != std::string::npos);
  r.checks.push_back({"c", Status::Fail, "no", 0});
  CHECK(r.exit_code() == 1);
  CHECK(digest("abc") != digest("abd"));
  CHECK(digest("abc").size() == 16);
}

TEST_CASE("twist command writes a presentation") {
  RunOptions o;
  std::string text;
  Presentation a1 = family_from_strings("A", {{"b", "1"}, {"q", "3"}});
  RunReport r = cmd_twist(a1, {"1", "1", "1/2"}, o, &text);
  CHECK(r.exit_code() == 0);
  Presentation t = parse_presentation_file(text).presentation;
  CHECK(hilbert_check(t, 6, standard_series()).pass);
  CHECK_THROWS_AS(cmd_twist(a1, {"1", "2"}, o, &text), InputError);
}
