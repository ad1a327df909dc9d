#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncalg/presentation.hpp"

namespace ncalg {

/// Polynomial in u, v with rational coefficients, keyed by (deg_u, deg_v).
/// Univariate series use the variable t stored as u.
using SeriesPoly = std::map<Bidegree, Rational>;

/// Rational power series numerator/denominator.
struct SeriesExpr {
  bool bivariate = false;
  SeriesPoly numerator;
  SeriesPoly denominator;

  SeriesExpr operator*(const SeriesExpr& o) const;
};

/// 1/((1-t)^3 (1-t^2))
SeriesExpr standard_series();
/// 1/((1-u)^2 (1-v) (1-uv))
SeriesExpr bigraded_series();
/// Polynomial p(t) (or p(u,v)) as a series with denominator 1.
SeriesExpr series_polynomial(const SeriesPoly& p, bool bivariate);
SeriesPoly poly_mul(const SeriesPoly& a, const SeriesPoly& b);

/// Parses a rational function in t, or in u and v, in the expression grammar.
SeriesExpr parse_series(std::string_view text);

/// Power-series coefficients through total degree `bound`.
struct CoeffTable {
  bool bivariate = false;
  int bound = 0;
  std::map<Bidegree, Rational> coeffs;

  Rational at(int n) const;
  Rational at(Bidegree b) const;
  /// Sum over bidegrees of total degree n.
  Rational total(int n) const;
};

/// Throws InputError if the denominator has zero constant term.
CoeffTable expand(const SeriesExpr& series, int bound);

struct HilbertReport {
  bool pass = false;
  bool bivariate = false;
  int bound = 0;
  /// Irreducible-word counts: counts[d][i] for bidegree (i, d - i).
  std::vector<std::vector<long>> counts;
  std::optional<Bidegree> first_mismatch;
  Rational expected;
  long actual = 0;
  std::vector<std::string> side_conditions;
  std::string summary() const;
};

/// Completes through `bound` and compares irreducible-word counts with the
/// series coefficients in every (bi)degree <= bound.
HilbertReport hilbert_check(const Presentation& pres, int bound, const SeriesExpr& series,
                            const CompletionOptions& options = {});
HilbertReport hilbert_check(const RewriteSystem& completed, int bound, const SeriesExpr& series);

/// Shift vectors of a free complex, listed from the module mapping onto the
/// trivial module outwards; shift s means A(-s). An empty list is the zero
/// complex (nothing is augmented). Otherwise checks that
/// 1 - sum_i (-1)^i h_{F_i}(t) vanishes through 2 * max shift + 4.
bool euler_check(const std::vector<std::vector<int>>& shifts, const SeriesExpr& series);

struct QuotientSeriesReport {
  bool precondition_ok = false;
  std::string precondition_message;
  int degree = 0;
  std::vector<long> quotient_counts;
  /// Comparison with (1 - t^d) h_A(t), which certifies regularity.
  bool matches_expected = false;
  std::optional<int> first_mismatch;
  /// Comparison with 1/(1-t^3) and 1/(1-t)^3, both reported.
  bool matches_one_minus_t_cubed = false;
  bool matches_one_minus_t_all_cubed = false;
  bool pass() const { return precondition_ok && matches_expected; }
  std::string summary() const;
};

/// Verifies z normal, completes pres + {z} and compares the quotient's
/// single-graded counts with (1 - t^deg z) * h_pres, where h_pres is read
/// from the irreducible-word counts of pres itself.
QuotientSeriesReport quotient_series_check(const Presentation& pres, const NcPoly& z, int bound,
                                           const CompletionOptions& options = {});

}  // namespace ncalg
