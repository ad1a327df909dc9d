#include <random>

#include "doctest.h"
#include "ncalg/catalog.hpp"
#include "ncalg/errors.hpp"
#include "ncalg/hilbert.hpp"
#include "ncalg/normal.hpp"
#include "ncalg/resolution.hpp"

using namespace ncalg;

namespace {

using Params = std::map<std::string, std::string>;

// Random integer point for the free parameters of a family, avoiding the
// nonvanishing conditions (family() rejects those).
Params random_point(const std::string& id, std::mt19937& rng, const Params& fixed) {
  std::uniform_int_distribution<int> d(-6, 6);
  for (;;) {
    Params p = fixed;
    for (auto& k : family_parameters(id))
      if (!p.count(k)) p[k] = std::to_string(d(rng));
    try {
      family_from_strings(id, p);
      return p;
    } catch (const InputError&) {
    }
  }
}

FreeComplex data_complex(const ResolutionData& d, Presentation& pres) {
  pres = family_from_strings(d.family, d.params);
  return build_standard_complex(pres, d.d3, d.d2);
}

}  // namespace

TEST_CASE("catalog normal elements hold symbolically") {
  for (auto& c : normal_claims()) {
    CAPTURE(c.tag);
    Presentation p = family_from_strings(c.family, c.params);
    auto r = verify_normal(family_element(c.family, c.element, c.params), p);
    CHECK(r.normal());
  }
}

TEST_CASE("normality is stable under specialization") {
  std::mt19937 rng(11);
  for (auto& c : normal_claims()) {
    for (int i = 0; i < 3; ++i) {
      Params pt = random_point(c.family, rng, c.params);
      CAPTURE(c.tag);
      CAPTURE(pt.size());
      Presentation p = family_from_strings(c.family, pt);
      CHECK(verify_normal(family_element(c.family, c.element, pt), p).normal());
    }
  }
}

TEST_CASE("quotient by a normal element drops the series by 1 - t^2") {
  std::mt19937 rng(5);
  for (auto& c : normal_claims()) {
    CAPTURE(c.tag);
    Params pt = random_point(c.family, rng, c.params);
    Presentation p = family_from_strings(c.family, pt);
    auto q = quotient_series_check(p, family_element(c.family, c.element, pt), 8);
    CHECK(q.precondition_ok);
    CHECK(q.pass());
  }
}

TEST_CASE("non-normal elements are rejected") {
  Presentation a = family_from_strings("A", {{"b", "2"}, {"q", "3"}});
  CHECK_FALSE(verify_normal(a.parse("x1"), a).normal());
  CHECK_FALSE(verify_normal(a.parse("x3*x1 - x1*x3"), a).normal());
  Presentation h = family_from_strings("H", {{"b", "2"}});
  CHECK_FALSE(verify_normal(h.parse("x3*x1 - x1*x3"), h).normal());
  auto q = quotient_series_check(a, a.parse("x1"), 6);
  CHECK_FALSE(q.precondition_ok);
}

TEST_CASE("central elements") {
  Presentation d = family_from_strings("D", {{"b", "1"}});
  CHECK(verify_central(d.parse("x1^2 + x2^2"), d));
  CHECK(verify_central(d.parse("x3^2"), d));
  CHECK_FALSE(verify_central(d.parse("x1^2"), d));
  // In D(1,h)/(x1^2 + x2^2, x3^2) the element x1^2 anticommutes with x3.
  Presentation b = quotient(d, {d.parse("x1^2 + x2^2"), d.parse("x3^2")});
  CHECK(verify_normal(b.parse("x1^2"), b).normal());
  CHECK_FALSE(verify_central(b.parse("x1^2"), b));
}

TEST_CASE("normal-element chains") {
  for (auto& c : chain_claims()) {
    CAPTURE(c.tag);
    Presentation p = family_from_strings(c.family, c.params);
    auto r = verify_chain(p, c.steps, c.finite_bound);
    CHECK(r.pass);
    CHECK(r.terminal.finite);
    if (c.expected_dimension) CHECK(r.terminal.basis.size() == *c.expected_dimension);
  }
}

TEST_CASE("finite dimension check on a truncated polynomial ring") {
  Presentation p = make_presentation("k[x]/(x^2)", {"x2*x1 - x1*x2", "x3*x1 - x1*x3", "x3*x2 - x2*x3", "x1^2", "x2^2", "x3^2"}, {});
  auto r = finite_dim_check(p, 6);
  CHECK(r.finite);
  CHECK(r.basis.size() == 8);
  Presentation poly = make_presentation("k[x]", {"x2*x1 - x1*x2", "x3*x1 - x1*x3", "x3*x2 - x2*x3"}, {});
  CHECK_FALSE(finite_dim_check(poly, 6).finite);
}

TEST_CASE("resolutions of D, E, F, G") {
  for (auto& d : resolution_data()) {
    CAPTURE(d.family);
    Presentation p;
    FreeComplex cx = data_complex(d, p);
    CHECK(verify_complex(cx, p).pass);
    auto shape = verify_resolution_shape(cx, p);
    CHECK(shape.pass);
    CHECK_FALSE(shape.determinant.is_zero());
    CHECK(euler_check(cx.euler_shifts(), standard_series()));
    CHECK(check_transcription(cx, p).pass);
  }
}

TEST_CASE("a perturbed matrix is not a complex") {
  auto data = resolution_data();
  REQUIRE(!data.empty());
  ResolutionData d = data[0];
  d.d2[0][0] = "-x1";
  Presentation p;
  FreeComplex cx = data_complex(d, p);
  CHECK_FALSE(verify_complex(cx, p).pass);
}

TEST_CASE("matrix entries must be homogeneous of the shift degree") {
  Presentation p = family("A");
  CHECK_THROWS_AS(parse_matrix({{"x1 + x1*x2"}}, {-1}, {0}, p), InputError);
  CHECK_THROWS_AS(parse_matrix({{"x1*x2"}}, {-1}, {0}, p), InputError);
  CHECK_NOTHROW(parse_matrix({{"x1*x2"}}, {-2}, {0}, p));
  CHECK_THROWS_AS(parse_matrix({{"x1", "x2"}}, {-1}, {0}, p), InputError);
}

TEST_CASE("x3 is a right nonzerodivisor through degree 6") {
  for (auto& id : family_ids()) {
    CAPTURE(id);
    CHECK(right_nonzerodivisor_check(family(id), 2, 6).pass);
  }
  Presentation zd = make_presentation("zd", {"x2*x1 - x1*x2", "x3*x2 - x2*x3", "x1*x3"}, {});
  CHECK_FALSE(right_nonzerodivisor_check(zd, 2, 4).pass);
}
