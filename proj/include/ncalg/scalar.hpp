#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ncalg/param_poly.hpp"

namespace ncalg {

/// A parameter symbol that stands for an algebraic number, with its monic
/// minimal polynomial over the rationals.
struct AlgebraicConstraint {
  SymbolId symbol;
  ParamPoly minimal_polynomial;
};

/// Set of algebraic constraints shared by all scalars of one presentation.
/// Constraints are validated on insertion: the polynomial must be univariate
/// in its symbol, of degree >= 1, and pass an irreducibility test (rational
/// root test, which is decisive up to degree 3).
class ConstraintSet {
 public:
  ConstraintSet() = default;
  explicit ConstraintSet(std::vector<AlgebraicConstraint> constraints);

  const std::vector<AlgebraicConstraint>& constraints() const { return constraints_; }
  bool empty() const { return constraints_.empty(); }
  const AlgebraicConstraint* find(SymbolId s) const;
  bool constrains(SymbolId s) const { return find(s) != nullptr; }

  /// Remainder of `p` modulo every minimal polynomial.
  ParamPoly reduce(const ParamPoly& p) const;

  bool operator==(const ConstraintSet& o) const;

 private:
  std::vector<AlgebraicConstraint> constraints_;
};

using ConstraintsPtr = std::shared_ptr<const ConstraintSet>;

ConstraintsPtr make_constraints(std::vector<AlgebraicConstraint> constraints);

/// Rational function in parameter symbols, reduced modulo the algebraic
/// constraints of its context. The denominator never involves a constrained
/// symbol and has leading coefficient 1.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v);  // NOLINT: implicit from integer literal
  explicit Scalar(const Rational& v);
  explicit Scalar(const ParamPoly& p, ConstraintsPtr ctx = nullptr);
  Scalar(const ParamPoly& num, const ParamPoly& den, ConstraintsPtr ctx = nullptr);

  static Scalar symbol(SymbolId s, ConstraintsPtr ctx = nullptr);
  static Scalar symbol(std::string_view name, ConstraintsPtr ctx = nullptr);

  const ParamPoly& numerator() const { return num_; }
  const ParamPoly& denominator() const { return den_; }
  const ConstraintsPtr& context() const { return ctx_; }
  /// Same value reinterpreted (and renormalized) under another context.
  Scalar with_context(ConstraintsPtr ctx) const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  /// Precondition: is_rational().
  Rational rational_value() const;
  std::vector<SymbolId> symbols() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Throws DivisionByZero when `o` is zero.
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar inverse() const;
  Scalar pow(long n) const;

  /// Cross-multiplication equality, reduced modulo the constraints.
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Exact value at a point. Every symbol must be assigned. A constrained
  /// symbol may only be assigned a root of its minimal polynomial.
  Rational evaluate(const std::map<SymbolId, Rational>& assignment) const;

  /// Replaces symbols by scalars (partial substitution allowed). The result
  /// lives in `ctx` if given, otherwise in this scalar's context. Throws
  /// PoleError if the denominator becomes zero.
  Scalar substitute(const std::map<SymbolId, Scalar>& values, ConstraintsPtr ctx = nullptr) const;

  std::string to_string() const;

 private:
  void normalize();
  ParamPoly num_;
  ParamPoly den_ = ParamPoly(1L);
  ConstraintsPtr ctx_;
};

/// Picks the shared context of two operands; throws InputError if both carry
/// different nonempty constraint sets.
ConstraintsPtr merge_contexts(const ConstraintsPtr& a, const ConstraintsPtr& b);

/// Evaluates a polynomial in Scalars (used by substitution).
Scalar substitute_poly(const ParamPoly& p, const std::map<SymbolId, Scalar>& values, const ConstraintsPtr& ctx);

/// Exact value of a polynomial at a full rational assignment.
Rational evaluate_poly(const ParamPoly& p, const std::map<SymbolId, Rational>& assignment);

/// Symbols an expression may mention, and the context its value lives in.
/// When `allowed` is empty every identifier is accepted and interned.
struct ScalarScope {
  std::optional<std::set<std::string>> allowed;
  ConstraintsPtr ctx;
};

/// Parses the coefficient expression grammar (see expr_parser.hpp).
/// Throws ParseError with a position on syntax errors or unknown symbols.
Scalar parse_scalar(std::string_view text, const ScalarScope& scope = {});

/// Parses an expression that must be a polynomial (no symbolic denominator).
ParamPoly parse_poly(std::string_view text, const ScalarScope& scope = {});

}  // namespace ncalg
