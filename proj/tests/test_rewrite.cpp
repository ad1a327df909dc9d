#include <functional>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "ncalg/errors.hpp"
#include "ncalg/rewrite.hpp"

using namespace ncalg;

namespace {

Alphabet abc() { return Alphabet({{"x1", {1, 0}}, {"x2", {1, 0}}, {"x3", {0, 1}}}); }

NcPoly N(const std::string& text) { return parse_ncpoly(text, abc()); }

RewriteSystem sys_of(const std::vector<std::string>& rels) {
  std::vector<NcPoly> ps;
  for (auto& r : rels) ps.push_back(N(r));
  return make_system(abc(), ps);
}

// The general template with l = -1 (r1-r4 as orienting relations).
std::vector<std::string> template_relations() {
  return {"x2*x1 - p*x1*x2 - m*x1^2", "x3*x2 - a*x3*x1 - n*x1*x3 - b*x2*x3",
          "x3^2*x1 - c*x1*x3^2 - d*x2*x3^2 - e*x3*x1*x3",
          "x3*x1^2 - (f*x1^2 + g*x1*x2 + h*x2^2)*x3 - (j*x1 + k*x2)*x3*x1"};
}

RewriteSystem a_family(const std::string& b, const std::string& q) {
  auto sub = [&](std::string s) {
    std::string out;
    for (char ch : s) {
      if (ch == 'b') out += "(" + b + ")";
      else if (ch == 'q') out += "(" + q + ")";
      else out += ch;
    }
    return out;
  };
  return sys_of({sub("x2*x1 - 1/q*x1*x2"), sub("x3*x2 + 1/(q^2*b)*x3*x1 - x1*x3 - b*x2*x3"),
                 sub("x3^2*x1 + q^3*b^2*x1*x3^2 - (q^2+q)*b*x3*x1*x3"),
                 sub("x3*x1^2 + q^3*b^2*x1^2*x3 - (q^2+q)*b*x1*x3*x1")});
}

// Brute force: every complete rewriting path from w, in every choice of rule
// and position, collecting the distinct terminal normal forms.
void all_paths(const RewriteSystem& sys, const NcPoly& f, std::vector<NcPoly>& out, int& budget) {
  if (--budget < 0) return;
  bool any = false;
  for (auto& [w, c] : f.terms()) {
    for (std::size_t r = 0; r < sys.rules.size(); ++r) {
      const Word& lead = sys.rules[r].lead;
      for (std::size_t p = w.find(lead); p != std::string::npos; p = w.find(lead, p + 1)) {
        any = true;
        NcPoly next = f - NcPoly(w, c) + rewrite_once(sys, w, {r, p}).scaled(c);
        all_paths(sys, next, out, budget);
      }
    }
  }
  if (!any) {
    for (auto& g : out)
      if (g == f) return;
    out.push_back(f);
  }
}

}  // namespace

TEST_CASE("make_rule") {
  Alphabet a = abc();
  auto r1 = make_rule(N("x2*x1 - p*x1*x2"), a);
  CHECK(r1.lead == a.word({1, 0}));
  CHECK(r1.tail == N("p*x1*x2"));
  CHECK(r1.side_conditions.empty());
  auto r2 = make_rule(N("x3*x2 - a*x3*x1 - n*x1*x3 - b*x2*x3"), a);
  CHECK(r2.lead == a.word({2, 1}));
  auto r3 = make_rule(N("(b-1)*x3*x1^2 - x1^2*x3"), a);
  CHECK(r3.lead == a.word({2, 0, 0}));
  REQUIRE(r3.side_conditions.size() == 1);
  CHECK(r3.side_conditions[0] == parse_poly("b - 1"));
  CHECK(r3.tail == N("1/(b-1)*x1^2*x3"));
  CHECK_THROWS_AS(make_rule(NcPoly(), a), InputError);
  CHECK_THROWS_AS(make_rule(N("x1*x2 - x3"), a), InputError);
}

TEST_CASE("reduce examples") {
  auto sys = a_family("1", "2");
  Alphabet a = abc();
  CHECK(reduce(N("x2*x1"), sys) == N("1/2*x1*x2"));
  CHECK(reduce(N("x1*x2"), sys) == N("x1*x2"));
  auto t = sys_of({template_relations()[0], template_relations()[1]});
  auto amb = find_ambiguities(t, 3);
  REQUIRE(amb.size() == 1);
  NcPoly left = rewrite_once(t, amb[0].witness, {amb[0].rule_left, amb[0].pos_left});
  NcPoly right = rewrite_once(t, amb[0].witness, {amb[0].rule_right, amb[0].pos_right});
  NcPoly disc = reduce(left - right, t).scaled(parse_scalar("1/p"));
  CHECK(disc == N("1/p*n*x1*x3*x1 + 1/p*b*x2*x3*x1 + (a-m)/p*x3*x1^2 - x3*x1*x2"));
}

TEST_CASE("find_ambiguities") {
  Alphabet a = abc();
  auto two = sys_of({"x2*x1", "x3*x2"});
  auto amb = find_ambiguities(two, 6);
  REQUIRE(amb.size() == 1);
  CHECK(amb[0].witness == a.word({2, 1, 0}));
  CHECK(amb[0].kind == Ambiguity::Kind::Overlap);

  auto five = sys_of({"x2*x1", "x3*x2", "x3^2*x1", "x3*x1^2", "x3*x1*x2"});
  auto amb4 = find_ambiguities(five, 4, 4);
  std::set<std::string> witnesses;
  for (auto& x : amb4) witnesses.insert(a.to_string(x.witness));
  CHECK(witnesses.count("x3^2*x1*x2"));
  CHECK(witnesses.count("x3^2*x1^2"));
  CHECK(witnesses.count("x3*x1*x2*x1"));
  CHECK(find_ambiguities(sys_of({"x2*x1"}), 6).empty());
  // Self overlap and inclusion.
  auto self = sys_of({"x1^2", "x2*x1^2*x3"});
  auto amb_s = find_ambiguities(self, 6);
  int overlaps = 0, inclusions = 0;
  for (auto& x : amb_s) (x.kind == Ambiguity::Kind::Overlap ? overlaps : inclusions)++;
  CHECK(overlaps >= 1);
  CHECK(inclusions == 1);
}

TEST_CASE("completion of A(1,2) and the template") {
  auto sys = a_family("1", "2");
  auto res = complete(sys, 6);
  CHECK(res.added.size() == 1);
  CHECK(res.added[0].lead == abc().word({2, 0, 1}));
  for (auto& amb : find_ambiguities(res.system, 6)) CHECK(resolve_ambiguity(amb, res.system).is_zero());

  auto t = sys_of(template_relations());
  auto r3 = complete(t, 3);
  REQUIRE(r3.added.size() == 1);
  CHECK(r3.added[0].lead == abc().word({2, 0, 1}));
}

TEST_CASE("irreducible words") {
  auto sys = complete(a_family("2", "3"), 6).system;
  Alphabet a = abc();
  auto w4 = irreducible_words(sys, 4);
  CHECK(w4.size() == 22);
  // Each is of the form x1^i x2^j (x3 x1)^k x3^l.
  for (auto& w : w4) {
    std::string s = w.letters;
    std::size_t i = 0;
    while (i < s.size() && s[i] == 0) ++i;
    while (i < s.size() && s[i] == 1) ++i;
    while (i + 1 < s.size() && s[i] == 2 && s[i + 1] == 0) i += 2;
    while (i < s.size() && s[i] == 2) ++i;
    CHECK(i == s.size());
  }
  auto w0 = irreducible_words(sys, 0);
  REQUIRE(w0.size() == 1);
  CHECK(w0[0].empty());
}

TEST_CASE("reduce is idempotent and linear; memoized equals the global loop") {
  auto sys = complete(a_family("2", "3"), 6).system;
  Alphabet a = abc();
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> letter(0, 2), coeff(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<NcPoly::Term> terms_f, terms_g;
    for (int k = 0; k < 3; ++k) {
      std::vector<std::size_t> w1, w2;
      for (int l = 0; l < 4; ++l) {
        w1.push_back(static_cast<std::size_t>(letter(rng)));
        w2.push_back(static_cast<std::size_t>(letter(rng)));
      }
      terms_f.emplace_back(a.word(w1), Scalar(static_cast<long>(coeff(rng))));
      terms_g.emplace_back(a.word(w2), Scalar(static_cast<long>(coeff(rng))));
    }
    NcPoly f = NcPoly::from_terms(terms_f), g = NcPoly::from_terms(terms_g);
    NcPoly rf = reduce(f, sys);
    CHECK(reduce(rf, sys) == rf);
    Scalar al(3L), be(Rational(-2, 5));
    CHECK(reduce(f.scaled(al) + g.scaled(be), sys) == rf.scaled(al) + reduce(g, sys).scaled(be));
    auto traced = reduce_traced(f, sys);
    CHECK(traced.normal_form == rf);
  }
}

TEST_CASE("reduction is multiplicative after completion") {
  auto sys = complete(a_family("2", "3"), 6).system;
  Alphabet a = abc();
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> letter(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::size_t> u, v;
    for (int l = 0; l < 2; ++l) u.push_back(static_cast<std::size_t>(letter(rng)));
    for (int l = 0; l < 3; ++l) v.push_back(static_cast<std::size_t>(letter(rng)));
    NcPoly f = NcPoly(a.word(u)) + NcPoly(a.word(v)), g = NcPoly(a.word(v)) - NcPoly(a.word(u));
    CHECK(reduce(f * g, sys) == reduce(reduce(f, sys) * reduce(g, sys), sys));
  }
}

TEST_CASE("confluence by exhaustive paths on a completed system") {
  auto sys = complete(a_family("2", "3"), 6).system;
  Alphabet a = abc();
  int checked = 0;
  for (int d = 2; d <= 4; ++d) {
    for (auto& w : a.words_of_degree(d)) {
      if (is_irreducible(w, sys)) continue;
      std::vector<NcPoly> forms;
      int budget = 20000;
      all_paths(sys, NcPoly(w), forms, budget);
      if (budget < 0) continue;
      CHECK(forms.size() == 1);
      ++checked;
      if (checked > 40) break;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("completion budget") {
  // The self overlap x2^3 of x2^2 -> x1^2 forces a new rule.
  auto sys = sys_of({"x2^2 - x1^2"});
  CompletionOptions opt;
  opt.max_new_rules = 0;
  CHECK_THROWS_AS(complete(sys, 6, opt), BudgetExceeded);
}
