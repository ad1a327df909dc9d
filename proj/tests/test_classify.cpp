#include <random>
#include <set>

#include "doctest.h"
#include "ncalg/catalog.hpp"
#include "ncalg/classify.hpp"
#include "ncalg/errors.hpp"
#include "ncalg/symbols.hpp"

using namespace ncalg;

namespace {

const CoefficientSystem& tl() {
  static const CoefficientSystem s = overlap_system("TL");
  return s;
}

std::map<std::string, std::string> random_point(const std::string& id, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  for (;;) {
    std::map<std::string, std::string> p;
    for (auto& k : family_parameters(id)) p[k] = std::to_string(d(rng));
    try {
      family_from_strings(id, p);
      return p;
    } catch (const InputError&) {
    }
  }
}

}  // namespace

TEST_CASE("overlap systems are deterministic") {
  for (auto& id : {"TL", "TK", "TH", "S32"}) {
    CAPTURE(id);
    auto a = overlap_system(id), b = overlap_system(id);
    CHECK(a.polynomials() == b.polynomials());
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i].monomial == b.entries[i].monomial);
  }
}

TEST_CASE("TL system shape") {
  std::set<std::string> rels;
  for (auto& e : tl().entries) rels.insert(e.relation);
  CHECK(rels == std::set<std::string>{"r6", "r7", "r8"});
  const Alphabet& al = tl().tmpl.alphabet;
  const SystemEntry* e = tl().find("r6", al.word_from_names({"x3", "x1", "x3", "x1"}));
  REQUIRE(e != nullptr);
  // -qba - qn + ea - ze with q = 1/p and z = (a - m)/p.
  CHECK(e->value == parse_scalar("-b*a/p - n/p + e*a - (a - m)*e/p"));
  const SystemEntry* f = tl().find("r7", al.word_from_names({"x3", "x1", "x3", "x1"}));
  REQUIRE(f != nullptr);
  CHECK(f->value == parse_scalar("-k*a + e - j"));
}

TEST_CASE("TL golden coefficients") {
  auto d = verify_displayed("TL");
  CHECK(d.pass);
  CHECK(d.lines.size() >= 15);
  for (auto& l : d.lines) CHECK_MESSAGE(l.match, (l.relation + " " + l.expected_text));
  CHECK(d.extra.empty());
  CHECK(d.sign.at("r6") == 1);
  CHECK(d.sign.at("r7") == 1);
}

TEST_CASE("golden file errors") {
  CHECK_THROWS_AS(verify_displayed("TL", "/nonexistent"), InputError);
}

TEST_CASE("ties are eliminated") {
  const std::set<std::string> allowed = {"p", "a", "b", "c", "d", "e", "f", "g", "h", "j", "k", "m", "n"};
  for (auto& id : {"TL", "TK", "TH"}) {
    for (auto& e : overlap_system(id).entries)
      for (SymbolId s : e.poly.symbols()) CHECK_MESSAGE(allowed.count(symbol_name(s)), symbol_name(s));
  }
}

TEST_CASE("every family solves its case symbolically") {
  for (auto& id : family_ids()) {
    CAPTURE(id);
    auto r = family_solves(family(id), id == "H" ? "TJ" : "TL");
    CHECK(r.pass);
    CHECK(r.nonzero.empty());
  }
}

TEST_CASE("family solutions vanish at random numeric points") {
  std::mt19937 rng(3);
  auto tj = overlap_system("TJ");
  for (auto& id : family_ids()) {
    CAPTURE(id);
    for (int i = 0; i < 25; ++i) {
      Presentation p = family_from_strings(id, random_point(id, rng));
      CHECK(family_solves(p, id == "H" ? tj : tl()).pass);
    }
  }
}

TEST_CASE("generic TL points are not solutions") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int i = 0; i < 25; ++i) {
    std::map<SymbolId, Rational> at;
    for (SymbolId s : tl().tmpl.parameter_ids()) {
      int v = 0;
      while (v == 0) v = d(rng);
      at[s] = Rational(v);
    }
    bool nonzero = false;
    for (auto& e : tl().entries) nonzero = nonzero || e.value.evaluate(at) != 0;
    CHECK(nonzero);
  }
}

TEST_CASE("a perturbed family does not solve the system") {
  Presentation a = family_from_strings("A", {{"b", "2"}, {"q", "3"}});
  a.relations[2] += a.parse("x3*x1*x3");
  auto r = family_solves(a, tl());
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.nonzero.empty());
}

TEST_CASE("no-solution certificates") {
  auto s32 = overlap_system("S32");
  auto r = no_solution_certificate(s32, {});
  CHECK(r.inconsistent());
  CHECK(r.witness.find("-1") != std::string::npos);

  auto tk = overlap_system("TK");
  auto p1 = no_solution_certificate(tk, {{"m", 0L}, {"p", 1L}, {"a", 0L}, {"b", 0L}, {"n", 1L}});
  CHECK(p1.inconsistent());
  auto c = no_solution_certificate(tk, {{"m", 1L}, {"p", 1L}, {"a", 0L}}, {"c"});
  CHECK(c.inconsistent());
  auto dd = no_solution_certificate(tk, {{"m", 1L}, {"p", 1L}, {"a", 0L}, {"c", 0L}}, {"d"});
  CHECK(dd.inconsistent());
}

TEST_CASE("TK quantum case is inconsistent") {
  auto tk = overlap_system("TK");
  auto q = no_solution_certificate(tk, {{"m", 0L}, {"n", 1L}}, {"a", "b", "p - 1", "d - b*c"});
  CHECK(q.inconsistent());
}

TEST_CASE("a proper ideal or an exhausted budget is not a certificate") {
  auto tk = overlap_system("TK");
  CHECK_FALSE(no_solution_certificate(tk, {{"m", 1L}, {"p", 1L}, {"a", 0L}}).inconsistent());
  BuchbergerOptions tiny;
  tiny.max_pair_reductions = 5;
  auto u = no_solution_certificate(tk, {{"m", 0L}, {"n", 1L}}, {"a", "b", "p - 1", "d - b*c"}, tiny);
  CHECK(u.verdict == InconsistencyResult::Verdict::Unknown);
}

TEST_CASE("structural non-domain certificates") {
  auto th = structural_certificate("TH");
  CHECK(th.pass);
  CHECK(th.side == "right");
  CHECK(th.forcing.find("j = 0") != std::string::npos);
  auto z = structural_certificate("THzero");
  CHECK(z.pass);
  CHECK(z.side == "left");
  CHECK_THROWS_AS(structural_certificate("TL"), InputError);
}
