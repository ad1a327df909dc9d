#include "ncalg/expr_parser.hpp"
#include "ncalg/scalar.hpp"

namespace ncalg {

namespace {

struct ScalarOps {
  const ScalarScope& scope;

  Scalar from_integer(const Rational& r) { return Scalar(r).with_context(scope.ctx); }

  Scalar from_symbol(std::string_view name, std::size_t pos) {
    if (scope.allowed && !scope.allowed->count(std::string(name)))
      throw ParseError("unknown symbol '" + std::string(name) + "' at position " + std::to_string(pos), pos);
    return Scalar::symbol(name, scope.ctx);
  }

  Scalar div(const Scalar& a, const Scalar& b, std::size_t pos) {
    if (b.is_zero()) throw ParseError("division by zero at position " + std::to_string(pos), pos);
    return a / b;
  }

  Scalar pow(const Scalar& a, long e, std::size_t pos) {
    if (e < 0 && a.is_zero()) throw ParseError("zero raised to a negative power at position " + std::to_string(pos), pos);
    return a.pow(e);
  }
};

}  // namespace

Scalar parse_scalar(std::string_view text, const ScalarScope& scope) {
  ScalarOps ops{scope};
  ExprParser<Scalar, ScalarOps> parser(text, ops);
  return parser.parse();
}

ParamPoly parse_poly(std::string_view text, const ScalarScope& scope) {
  Scalar s = parse_scalar(text, scope);
  if (!s.denominator().is_constant())
    throw ParseError("expected a polynomial, got a rational function: " + std::string(text), 0);
  return s.numerator();
}

}  // namespace ncalg
