#include <random>

#include "doctest.h"
#include "ncalg/errors.hpp"
#include "ncalg/ncpoly.hpp"

using namespace ncalg;

namespace {

Alphabet abc() { return Alphabet({{"x1", {1, 0}}, {"x2", {1, 0}}, {"x3", {0, 1}}}); }

NcPoly N(const char* text, const Alphabet& a = abc()) { return parse_ncpoly(text, a); }

NcPoly random_nc(std::mt19937& rng, const Alphabet& a, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), coeff(-3, 3), nterms(0, 3), letter(0, 2);
  std::vector<NcPoly::Term> terms;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<std::size_t> idx;
    int d = deg(rng);
    for (int k = 0; k < d; ++k) idx.push_back(static_cast<std::size_t>(letter(rng)));
    terms.emplace_back(a.word(idx), Scalar(static_cast<long>(coeff(rng))));
  }
  return NcPoly::from_terms(terms);
}

}  // namespace

TEST_CASE("word order examples") {
  Alphabet a = abc();
  CHECK(word_compare(a.word({2, 0}), a.word({1, 2})) == Cmp::GT);
  CHECK(word_compare(a.word({0, 0, 0}), a.word({2, 1})) == Cmp::GT);
  CHECK(word_compare(a.word({2, 1}), a.word({2, 0})) == Cmp::GT);
  CHECK(word_compare(a.word({2, 1}), a.word({2, 1})) == Cmp::EQ);
  CHECK(a.to_string(a.word({2, 2, 0})) == "x3^2*x1");
  CHECK(a.bidegree(a.word({2, 2, 0})) == Bidegree{1, 2});
}

TEST_CASE("word order is compatible with concatenation and well-founded") {
  Alphabet a = abc();
  auto w3 = a.words_of_degree(3);
  auto w1 = a.words_of_degree(1);
  CHECK(w3.size() == 27);
  for (std::size_t i = 0; i + 1 < w3.size(); ++i) {
    REQUIRE(w3[i] < w3[i + 1]);
    for (auto& u : w1)
      for (auto& v : w1) CHECK(u * w3[i + 1] * v > u * w3[i] * v);
  }
  // Finitely many words below a given one.
  CHECK(a.words_of_degree(2).size() == 9);
}

TEST_CASE("noncommutative arithmetic") {
  Alphabet a = abc();
  CHECK(N("x2") * N("x1") == NcPoly(a.word({1, 0})));
  CHECK((N("x2*x1") + N("-x2*x1")).is_zero());
  CHECK(N("x3") * N("x2*x1") == N("x3*x2*x1"));
  CHECK(N("(x1 + x2)^2") == N("x1^2 + x1*x2 + x2*x1 + x2^2"));
  CHECK(N("x2*x1 - 1/q*x1*x2").coefficient(a.word({0, 1})) == parse_scalar("-1/q"));
}

TEST_CASE("linear maps") {
  Alphabet a = abc();
  NcPoly f = N("x2*x1 + x1*x2");
  CHECK(apply_linear_map(f, LinearMap::identity(3), a) == f);
  Scalar b = Scalar::symbol("b");
  LinearMap swap;
  swap.matrix = {{Scalar(), b, Scalar()}, {b.inverse(), Scalar(), Scalar()}, {Scalar(), Scalar(), Scalar(1L)}};
  CHECK(apply_linear_map(f, swap, a) == N("x1*x2 + x2*x1"));
  Scalar lam = Scalar::symbol("lambda"), p = Scalar::symbol("p");
  NcPoly g = N("x2*x1 - p*x1*x2");
  CHECK(apply_linear_map(g, LinearMap::diagonal({lam, lam, Scalar(1L)}), a) == g.scaled(lam * lam));
  CHECK(swap.determinant() == Scalar(-1L));
  CHECK(swap.compose(swap.inverse()).matrix == LinearMap::identity(3).matrix);
  CHECK(swap.preserves_bigrading(a));
}

TEST_CASE("opposite") {
  CHECK(opposite(N("x2*x1 - 1/q*x1*x2")) == N("x1*x2 - 1/q*x2*x1"));
  std::mt19937 rng(1);
  Alphabet a = abc();
  for (int i = 0; i < 30; ++i) {
    NcPoly f = random_nc(rng, a, 3), g = random_nc(rng, a, 3);
    CHECK(opposite(opposite(f)) == f);
    CHECK(opposite(f * g) == opposite(g) * opposite(f));
  }
}

TEST_CASE("linear maps are multiplicative") {
  std::mt19937 rng(2);
  Alphabet a = abc();
  LinearMap m;
  m.matrix = {{Scalar(2L), Scalar(1L), Scalar()}, {Scalar(-1L), Scalar(3L), Scalar()}, {Scalar(), Scalar(), Scalar(5L)}};
  for (int i = 0; i < 30; ++i) {
    NcPoly f = random_nc(rng, a, 3), g = random_nc(rng, a, 3);
    CHECK(apply_linear_map(f * g, m, a) == apply_linear_map(f, m, a) * apply_linear_map(g, m, a));
  }
}

TEST_CASE("ncpoly parse errors") {
  CHECK_THROWS_AS(N("x1 / x2"), ParseError);
  CHECK_THROWS_AS(N("x1^-1"), ParseError);
  CHECK(N("x1/2") == NcPoly(abc().letter(0), Scalar(Rational(1, 2))));
}
