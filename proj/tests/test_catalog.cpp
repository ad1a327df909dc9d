#include <random>
#include <set>

#include "doctest.h"
#include "ncalg/catalog.hpp"
#include "ncalg/errors.hpp"
#include "ncalg/hilbert.hpp"

using namespace ncalg;

namespace {

using Params = std::map<std::string, std::string>;

// Two numeric points per family.
std::vector<std::pair<std::string, Params>> numeric_points() {
  return {{"A", {{"b", "2"}, {"q", "3"}}}, {"A", {{"b", "3"}, {"q", "5"}}}, {"B", {{"b", "2"}}}, {"B", {{"b", "-3"}}},
          {"C", {{"b", "2"}}},             {"C", {{"b", "5"}}},             {"D", {{"b", "2"}, {"h", "5"}}},
          {"D", {{"b", "3"}, {"h", "-7"}}}, {"E", {{"b", "2"}}},            {"E", {{"b", "1/3"}}},
          {"F", {{"b", "2"}}},             {"F", {{"b", "-5"}}},            {"Fu", {{"b", "2"}}},
          {"Fu", {{"b", "7"}}},            {"G", {{"b", "2"}}},             {"G", {{"b", "3"}}},
          {"H", {{"b", "2"}}},             {"H", {{"b", "-1/2"}}}};
}

std::map<std::string, Scalar> as_scalars(const Params& p) {
  std::map<std::string, Scalar> out;
  for (auto& [k, v] : p) out[k] = parse_scalar(v);
  return out;
}

}  // namespace

TEST_CASE("family ids and parameters") {
  CHECK(family_ids() == std::vector<std::string>{"A", "B", "C", "D", "E", "F", "Fu", "G", "H"});
  CHECK(family_parameters("A") == std::vector<std::string>{"b", "q"});
  CHECK(family_parameters("D") == std::vector<std::string>{"b", "h"});
  CHECK(is_template("TK"));
  CHECK_FALSE(is_family("Z"));
  CHECK_THROWS_AS(family("Z"), InputError);
}

TEST_CASE("family H relation and parameter conditions") {
  Presentation h = family("H");
  CHECK(h.relations[1] == h.parse("x3*x2 - 2*b*x1*x3 - b*x2*x3"));
  CHECK_THROWS_AS(family_from_strings("A", {{"b", "0"}, {"q", "3"}}), InputError);
  CHECK_THROWS_AS(family_from_strings("A", {{"b", "2"}, {"q", "1"}}), InputError);
  CHECK_THROWS_AS(family_from_strings("H", {{"b", "0"}}), InputError);
}

TEST_CASE("relation bidegrees of every family") {
  for (auto& id : family_ids()) {
    CAPTURE(id);
    Presentation p = family(id);
    REQUIRE(p.relations.size() == 4);
    std::multiset<Bidegree> got;
    for (auto& r : p.relations) {
      auto b = r.bidegree(p.alphabet);
      REQUIRE(b.has_value());
      got.insert(*b);
    }
    CHECK(got == std::multiset<Bidegree>{{2, 0}, {1, 1}, {1, 2}, {2, 1}});
  }
}

TEST_CASE("substitution commutes with construction") {
  for (auto& [id, params] : numeric_points()) {
    CAPTURE(id);
    Presentation direct = family_from_strings(id, params);
    Presentation later = substitute(family(id), as_scalars(params));
    CHECK(same_relations(direct, later));
    CHECK(direct.is_numeric());
  }
}

TEST_CASE("twisting back by the inverse weights") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(1, 6);
  for (auto& id : family_ids()) {
    CAPTURE(id);
    Presentation p = family(id);
    std::vector<Scalar> w = {Scalar(long(d(rng))), Scalar(long(d(rng))), Scalar(Rational(1, d(rng)))}, inv;
    for (auto& x : w) inv.push_back(x.inverse());
    CHECK(same_relations(graded_twist(graded_twist(p, w), inv), p));
  }
}

TEST_CASE("twist of H(1) is H(b)") {
  Presentation h1 = family_from_strings("H", {{"b", "1"}});
  Presentation t = graded_twist(h1, {Scalar(1L), Scalar(1L), parse_scalar("1/b")});
  CHECK(same_relations(t, family("H")));
}

TEST_CASE("Ore extension of the cubic base of H") {
  // B = k<x1, x3>/(r3, r4) and the new generator x2.
  Presentation h = family("H");
  Alphabet ab({{"x1", {1, 0}}, {"x3", {0, 1}}});
  Presentation base = make_presentation("B", ab, {}, {"b"});
  for (std::size_t i : {2u, 3u}) {
    NcPoly r;
    for (auto& [w, c] : h.relations[i].terms()) {
      std::vector<std::string> names = h.alphabet.names(w);
      r += NcPoly(ab.word_from_names(names), c);
    }
    base.relations.push_back(r);
  }
  LinearMap sigma = LinearMap::diagonal({Scalar(1L), parse_scalar("1/b")});
  std::vector<NcPoly> delta = {parse_ncpoly("x1^2", ab), parse_ncpoly("-2*x1*x3", ab)};
  Presentation ext = ore_extension(base, sigma, delta, {"x2", {1, 0}});
  CHECK(ext.relations.size() == 4);
  CHECK(ext.alphabet.size() == 3);
  CHECK_NOTHROW(ext.validate());
}

TEST_CASE("completion through degree 6 adds exactly the rule with lead x3x1x2") {
  for (auto& id : family_ids()) {
    CAPTURE(id);
    auto done = complete(family(id), 6);
    std::set<std::string> leads;
    for (auto& r : done.system.rules) leads.insert(done.system.alphabet.to_string(r.lead));
    CHECK(leads == std::set<std::string>{"x2*x1", "x3*x2", "x3^2*x1", "x3*x1^2", "x3*x1*x2"});
    CHECK(done.added.size() == 1);
  }
}

TEST_CASE("degree-1 normal search") {
  Presentation poly = make_presentation("k[x]", {"x2*x1 - x1*x2", "x3*x1 - x1*x3", "x3*x2 - x2*x3"}, {});
  auto r = degree1_normal_search(poly);
  REQUIRE(r.verdict == Degree1NormalResult::Verdict::Found);
  bool has_x1 = false;
  for (auto& e : r.elements) has_x1 = has_x1 || e == poly.parse("x1");
  CHECK(has_x1);
  auto a = degree1_normal_search(family_from_strings("A", {{"b", "2"}, {"q", "3"}}));
  CHECK(a.verdict == Degree1NormalResult::Verdict::None);
  CHECK_THROWS_AS(degree1_normal_search(family("A")), InputError);
}

TEST_CASE("series expansion is multiplicative") {
  SeriesExpr s1 = parse_series("1/((1-t)^2*(1-t^3))");
  SeriesExpr s2 = parse_series("(1+t)/(1-t^2)^2");
  CoeffTable a = expand(s1, 10), b = expand(s2, 10), ab = expand(s1 * s2, 10);
  for (int n = 0; n <= 10; ++n) {
    Rational conv = 0;
    for (int i = 0; i <= n; ++i) conv += a.at(i) * b.at(n - i);
    CHECK(ab.at(n) == conv);
  }
}

TEST_CASE("bigraded series sums to the single series") {
  CoeffTable bi = expand(bigraded_series(), 10), single = expand(standard_series(), 10);
  const long want[] = {1, 3, 7, 13, 22, 34};
  for (int n = 0; n <= 5; ++n) CHECK(single.at(n) == want[n]);
  for (int n = 0; n <= 10; ++n) CHECK(bi.total(n) == single.at(n));
  CHECK(bi.at(Bidegree{2, 2}) == 6);
  CHECK(bi.at(Bidegree{3, 1}) == 7);
}

TEST_CASE("Hilbert counts at two numeric points per family") {
  for (auto& [id, params] : numeric_points()) {
    CAPTURE(id);
    Presentation p = family_from_strings(id, params);
    CHECK(hilbert_check(p, 8, standard_series()).pass);
    CHECK(hilbert_check(p, 8, bigraded_series()).pass);
    CHECK_FALSE(hilbert_check(p, 6, parse_series("1/(1-t)^4")).pass);
  }
}

TEST_CASE("Hilbert mismatch is located") {
  Presentation p = make_presentation("free-ish", {"x2*x1 - x1*x2"}, {});
  auto r = hilbert_check(p, 4, standard_series());
  CHECK_FALSE(r.pass);
  REQUIRE(r.first_mismatch.has_value());
}

TEST_CASE("Euler check on the standard shifts") {
  std::vector<std::vector<int>> shifts = {{0}, {1, 1, 1}, {2, 2, 3, 3}, {4, 4, 4}, {5}};
  CHECK(euler_check(shifts, standard_series()));
  shifts[2] = {2, 2, 2, 3};
  CHECK_FALSE(euler_check(shifts, standard_series()));
}
