#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncalg/symbols.hpp"

namespace ncalg {

using Rational = mpq_class;

std::string to_string(const Rational& r);

/// Commutative monomial in parameter symbols. Factors are kept sorted by
/// symbol id and never carry a zero exponent.
class ParamMonomial {
 public:
  using Factor = std::pair<SymbolId, std::uint32_t>;

  ParamMonomial() = default;
  static ParamMonomial variable(SymbolId s, std::uint32_t exponent = 1);
  static ParamMonomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t total_degree() const;
  std::uint32_t exponent(SymbolId s) const;
  bool contains(SymbolId s) const { return exponent(s) != 0; }

  ParamMonomial operator*(const ParamMonomial& other) const;
  bool divides(const ParamMonomial& other) const;
  /// Precondition: divides(other).
  ParamMonomial quotient_of(const ParamMonomial& other) const;
  ParamMonomial gcd(const ParamMonomial& other) const;
  ParamMonomial lcm(const ParamMonomial& other) const;
  ParamMonomial without(SymbolId s) const;

  bool operator==(const ParamMonomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

/// Graded reverse lexicographic comparison where a smaller symbol id is a
/// larger variable. Returns true when `a` is strictly greater than `b`.
bool grevlex_greater(const ParamMonomial& a, const ParamMonomial& b);

struct GrevlexGreater {
  bool operator()(const ParamMonomial& a, const ParamMonomial& b) const {
    return grevlex_greater(a, b);
  }
};

/// Multivariate polynomial over the rationals. Terms are stored in strictly
/// descending grevlex order with nonzero coefficients, so structural equality
/// is polynomial equality.
class ParamPoly {
 public:
  using Term = std::pair<ParamMonomial, Rational>;

  ParamPoly() = default;
  ParamPoly(long value);  // NOLINT: implicit from integer literal
  explicit ParamPoly(const Rational& value);
  static ParamPoly constant(const Rational& value);
  static ParamPoly variable(SymbolId s);
  static ParamPoly monomial(ParamMonomial m, Rational c);
  /// Builds from arbitrary terms, combining duplicates and dropping zeros.
  static ParamPoly from_terms(std::vector<Term> terms);
  /// Precondition: terms strictly descending with nonzero coefficients.
  static ParamPoly from_sorted_terms(std::vector<Term> terms) {
    ParamPoly p;
    p.terms_ = std::move(terms);
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Value of a constant polynomial (0 for the zero polynomial).
  Rational constant_value() const;
  Rational constant_term() const;
  const ParamMonomial& leading_monomial() const { return terms_.front().first; }
  const Rational& leading_coefficient() const { return terms_.front().second; }
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(SymbolId s) const;
  std::vector<SymbolId> symbols() const;
  bool contains(SymbolId s) const;

  ParamPoly operator-() const;
  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
  ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
  ParamPoly scaled(const Rational& c) const;
  ParamPoly times_monomial(const ParamMonomial& m, const Rational& c) const;
  ParamPoly pow(unsigned n) const;

  /// Exact quotient if `divisor` divides this polynomial.
  std::optional<ParamPoly> divide_exact(const ParamPoly& divisor) const;

  /// Coefficients with respect to one symbol: exponent -> coefficient.
  std::map<std::uint32_t, ParamPoly> coefficients_in(SymbolId s) const;
  static ParamPoly from_coefficients_in(SymbolId s, const std::map<std::uint32_t, ParamPoly>& coeffs);

  /// Greatest common divisor of the monomial supports (common monomial factor).
  ParamMonomial monomial_content() const;

  /// Divides by the leading coefficient; zero stays zero.
  ParamPoly monic() const;

  bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const ParamPoly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

std::string to_string(const ParamMonomial& m);

/// gcd normalised to leading coefficient 1 (gcd(0,0) = 0).
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

/// Remainder of `f` modulo a polynomial that is monic in `s`, treating all
/// other symbols as coefficients.
ParamPoly remainder_in(const ParamPoly& f, const ParamPoly& modulus, SymbolId s);

}  // namespace ncalg
