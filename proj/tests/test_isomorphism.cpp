#include <fstream>
#include <random>

#include "doctest.h"
#include "ncalg/catalog.hpp"
#include "ncalg/errors.hpp"
#include "ncalg/isomorphism.hpp"

using namespace ncalg;

namespace {

Presentation at(const std::string& id, std::map<std::string, std::string> params) { return family_from_strings(id, params); }

std::vector<Presentation> generic_points() {
  return {at("A", {{"b", "2"}, {"q", "3"}}), at("B", {{"b", "2"}}), at("C", {{"b", "3"}}), at("D", {{"b", "2"}, {"h", "5"}}),
          at("E", {{"b", "2"}}),             at("F", {{"b", "2"}}), at("Fu", {{"b", "3"}}), at("G", {{"b", "2"}}),
          at("H", {{"b", "2"}})};
}

MorphismClaim self_map(const Presentation& p, const LinearMap& m) {
  MorphismClaim c;
  c.tag = "test";
  c.kind = "auto";
  c.source = p;
  c.target = p;
  c.map = m;
  return c;
}

bool is_trivial_shape(const LinearMap& m) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j && !m.matrix[i][j].is_zero()) return false;
  return m.matrix[0][0] == m.matrix[1][1];
}

}  // namespace

TEST_CASE("catalog claims") {
  auto claims = catalog_claims();
  CHECK(claims.size() >= 26);
  for (auto& c : claims) {
    CAPTURE(c.tag);
    auto r = verify_morphism(c);
    if (c.tag == "3.13.2") {
      // Identity map into H(-b), as printed.
      CHECK_FALSE(r.pass);
    } else {
      CHECK(r.pass);
      CHECK(r.preserves_bigrading);
      CHECK_FALSE(r.determinant.is_zero());
    }
  }
}

TEST_CASE("op(H(b)) has no graded isomorphism to H(-b)") {
  for (auto b : {"2", "3"}) {
    auto s = search_morphisms(opposite(at("H", {{"b", b}})), at("H", {{"b", std::string("-") + b}}), MapShape::General);
    CHECK(s.verdict == MorphismSearch::Verdict::None);
  }
  auto s = search_morphisms(opposite(at("H", {{"b", "2"}})), at("H", {{"b", "1/2"}}), MapShape::General);
  CHECK(s.verdict == MorphismSearch::Verdict::Exists);
}

TEST_CASE("trivial automorphisms always verify") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> d(1, 7), sign(0, 1);
  for (auto& p : generic_points()) {
    CAPTURE(p.name);
    for (int i = 0; i < 3; ++i) {
      auto frac = [&] {
        Rational r(sign(rng) ? d(rng) : -d(rng), d(rng));
        r.canonicalize();
        return Scalar(r);
      };
      Scalar l = frac(), m = frac();
      CHECK(verify_morphism(self_map(p, LinearMap::diagonal({l, l, m}))).pass);
    }
  }
}

TEST_CASE("a non-automorphism is rejected") {
  Presentation a = at("A", {{"b", "2"}, {"q", "3"}});
  auto r = verify_morphism(self_map(a, LinearMap::diagonal({Scalar(1L), Scalar(2L), Scalar(1L)})));
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.forward.failures.empty());
}

TEST_CASE("squares of quasi-trivial automorphisms are trivial") {
  int seen = 0;
  for (auto& c : catalog_claims()) {
    if (c.kind != "auto") continue;
    ++seen;
    CAPTURE(c.tag);
    LinearMap sq = c.map.compose(c.map);
    CHECK(is_trivial_shape(sq));
    CHECK(verify_morphism(self_map(c.source, sq)).pass);
  }
  CHECK(seen >= 4);
}

TEST_CASE("distinct generic families are not linked by trivial or quasi-trivial maps") {
  std::vector<std::pair<Presentation, Presentation>> pairs = {
      {at("A", {{"b", "2"}, {"q", "3"}}), at("B", {{"b", "2"}})},
      {at("B", {{"b", "2"}}), at("C", {{"b", "2"}})},
      {at("C", {{"b", "2"}}), at("E", {{"b", "2"}})},
      {at("B", {{"b", "2"}}), at("G", {{"b", "2"}})},
      {at("D", {{"b", "2"}, {"h", "5"}}), at("A", {{"b", "2"}, {"q", "5"}})},
  };
  for (auto& [p, q] : pairs) {
    CAPTURE(p.name + " -> " + q.name);
    for (auto shape : {MapShape::Trivial, MapShape::QuasiTrivial})
      CHECK(search_morphisms(p, q, shape).verdict == MorphismSearch::Verdict::None);
  }
}

TEST_CASE("different algebraic constants are not compared") {
  // gamma has different minimal polynomials in F and G.
  CHECK_THROWS_AS(search_morphisms(at("F", {{"b", "2"}}), at("G", {{"b", "2"}}), MapShape::Trivial), InputError);
}

TEST_CASE("a linked pair is found") {
  // A(b,q) is isomorphic to A(q^2 b, 1/q) by a quasi-trivial map.
  auto s = search_morphisms(at("A", {{"b", "2"}, {"q", "3"}}), at("A", {{"b", "18"}, {"q", "1/3"}}), MapShape::QuasiTrivial);
  CHECK(s.verdict == MorphismSearch::Verdict::Exists);
}

TEST_CASE("automorphism group signatures") {
  CHECK(autgroup_signature(at("A", {{"b", "2"}, {"q", "3"}})).signature == AutSignature::T);
  CHECK(autgroup_signature(at("A", {{"b", "2"}, {"q", "-1"}})).signature == AutSignature::TxZ2);
  CHECK(autgroup_signature(at("D", {{"b", "2"}, {"h", "16"}})).signature == AutSignature::TxZ2);
  CHECK(autgroup_signature(at("D", {{"b", "2"}, {"h", "7"}})).signature == AutSignature::T);
  CHECK(autgroup_signature(at("G", {{"b", "3"}})).signature == AutSignature::TxZ2);
  CHECK(autgroup_signature(at("Fu", {{"b", "2"}})).signature == AutSignature::T);
}

TEST_CASE("non-generic points are rejected") {
  Presentation b1 = at("B", {{"b", "1"}});
  CHECK_FALSE(genericity(b1).generic);
  CHECK_THROWS_AS(autgroup_signature(b1), InputError);
  CHECK(genericity(at("H", {{"b", "2"}})).jordan);
  CHECK_THROWS_AS(autgroup_signature(family("A")), InputError);
}

TEST_CASE("graded maps have trivial or quasi-trivial shape") {
  for (auto& p : {at("A", {{"b", "2"}, {"q", "3"}}), at("B", {{"b", "2"}}), at("H", {{"b", "2"}})}) {
    CAPTURE(p.name);
    auto s = graded_map_shape_check(p, p);
    CHECK(s.pass);
    CHECK(s.any_solution);
  }
}

TEST_CASE("Ore extension structures") {
  for (auto& c : ore_claims()) {
    CAPTURE(c.family);
    auto r = verify_inverse_maps(c.ore, c.target, c.phi, c.psi);
    CHECK(r.pass);
    CHECK(r.composite_failures.empty());
  }
}

TEST_CASE("claims file errors") {
  std::string path = "ncalg_bad_claims.json";
  {
    std::ofstream f(path);
    f << "{\"format\": 1, \"claims\": [ {\"tag\": \"x\", }";
  }
  CHECK_THROWS_AS(load_claims(path), ParseError);
  {
    std::ofstream f(path);
    f << R"({"format": 1, "claims": [{"tag": "x", "kind": "auto", "source": {"family": "Q"}, "target": {"family": "A"}, "map": []}]})";
  }
  CHECK_THROWS_AS(load_claims(path), InputError);
  std::remove(path.c_str());
}
