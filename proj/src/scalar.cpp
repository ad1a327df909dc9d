#include "ncalg/scalar.hpp"

#include <algorithm>
#include <set>

#include "ncalg/errors.hpp"

namespace ncalg {

namespace {

std::vector<mpz_class> small_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n > 1000000) return out;  // too large to enumerate; caller skips the test
  long v = n.get_si();
  for (long d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.emplace_back(d);
      if (d != v / d) out.emplace_back(v / d);
    }
  }
  return out;
}

bool has_rational_root(const ParamPoly& p, SymbolId s) {
  auto coeffs = p.coefficients_in(s);
  mpz_class den_lcm = 1;
  for (auto& [e, c] : coeffs) {
    mpz_class d = c.constant_value().get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  std::map<std::uint32_t, mpz_class> ints;
  for (auto& [e, c] : coeffs) {
    Rational v = c.constant_value() * den_lcm;
    ints[e] = v.get_num();
  }
  if (!ints.count(0)) return true;  // zero is a root
  mpz_class a0 = ints[0], an = ints.rbegin()->second;
  auto ps = small_divisors(a0), qs = small_divisors(an);
  if (ps.empty() || qs.empty()) return false;
  for (auto& pn : ps) {
    for (auto& qd : qs) {
      for (int sign : {1, -1}) {
        Rational r(pn * sign, qd);
        r.canonicalize();
        Rational acc = 0;
        for (auto& [e, c] : ints) {
          Rational term = c;
          for (std::uint32_t k = 0; k < e; ++k) term *= r;
          acc += term;
        }
        if (acc == 0) return true;
      }
    }
  }
  return false;
}

ParamPoly determinant(std::vector<std::vector<ParamPoly>> m, const ConstraintSet& cs) {
  std::size_t n = m.size();
  if (n == 0) return ParamPoly(1L);
  if (n == 1) return m[0][0];
  if (n == 2) return cs.reduce(m[0][0] * m[1][1] - m[0][1] * m[1][0]);
  ParamPoly det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<ParamPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<ParamPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    ParamPoly term = cs.reduce(m[0][j] * determinant(std::move(minor), cs));
    if (j % 2) det -= term;
    else det += term;
  }
  return det;
}

}  // namespace

// ---------------------------------------------------------------------------
// ConstraintSet

ConstraintSet::ConstraintSet(std::vector<AlgebraicConstraint> constraints) {
  for (auto& c : constraints) {
    auto syms = c.minimal_polynomial.symbols();
    if (syms.size() != 1 || syms[0] != c.symbol)
      throw InputError("minimal polynomial of " + symbol_name(c.symbol) + " must involve only that symbol");
    std::uint32_t d = c.minimal_polynomial.degree_in(c.symbol);
    if (d < 1) throw InputError("minimal polynomial of " + symbol_name(c.symbol) + " has degree 0");
    ParamPoly lead = c.minimal_polynomial.coefficients_in(c.symbol).rbegin()->second;
    ParamPoly monic = c.minimal_polynomial.scaled(Rational(1) / lead.constant_value());
    if (d > 1 && has_rational_root(monic, c.symbol))
      throw InputError("minimal polynomial of " + symbol_name(c.symbol) + " is reducible over the rationals");
    if (find(c.symbol)) throw InputError("duplicate algebraic constraint on " + symbol_name(c.symbol));
    constraints_.push_back({c.symbol, std::move(monic)});
  }
}

const AlgebraicConstraint* ConstraintSet::find(SymbolId s) const {
  for (auto& c : constraints_)
    if (c.symbol == s) return &c;
  return nullptr;
}

ParamPoly ConstraintSet::reduce(const ParamPoly& p) const {
  ParamPoly r = p;
  for (auto& c : constraints_) r = remainder_in(r, c.minimal_polynomial, c.symbol);
  return r;
}

bool ConstraintSet::operator==(const ConstraintSet& o) const {
  if (constraints_.size() != o.constraints_.size()) return false;
  for (auto& c : constraints_) {
    auto* other = o.find(c.symbol);
    if (!other || other->minimal_polynomial != c.minimal_polynomial) return false;
  }
  return true;
}

ConstraintsPtr make_constraints(std::vector<AlgebraicConstraint> constraints) {
  if (constraints.empty()) return nullptr;
  return std::make_shared<const ConstraintSet>(std::move(constraints));
}

ConstraintsPtr merge_contexts(const ConstraintsPtr& a, const ConstraintsPtr& b) {
  if (a == b) return a;
  if (!a || a->empty()) return b;
  if (!b || b->empty()) return a;
  if (*a == *b) return a;
  throw InputError("scalars carry incompatible algebraic constraints");
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(long v) : num_(v) {}

Scalar::Scalar(const Rational& v) : num_(v) {}

Scalar::Scalar(const ParamPoly& p, ConstraintsPtr ctx) : num_(p), ctx_(std::move(ctx)) {
  if (ctx_) num_ = ctx_->reduce(num_);
}

Scalar::Scalar(const ParamPoly& num, const ParamPoly& den, ConstraintsPtr ctx)
    : num_(num), den_(den), ctx_(std::move(ctx)) {
  normalize();
}

Scalar Scalar::symbol(SymbolId s, ConstraintsPtr ctx) { return Scalar(ParamPoly::variable(s), std::move(ctx)); }

Scalar Scalar::symbol(std::string_view name, ConstraintsPtr ctx) { return symbol(intern_symbol(name), std::move(ctx)); }

Scalar Scalar::with_context(ConstraintsPtr ctx) const { return Scalar(num_, den_, std::move(ctx)); }

void Scalar::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (ctx_ && !ctx_->empty()) {
    num_ = ctx_->reduce(num_);
    den_ = ctx_->reduce(den_);
    if (den_.is_zero()) throw DivisionByZero();
    // Rationalize: multiply through by the cofactor making the denominator
    // free of each constrained symbol in turn.
    for (int pass = 0; pass < 8; ++pass) {
      const AlgebraicConstraint* hit = nullptr;
      for (auto& c : ctx_->constraints())
        if (den_.contains(c.symbol)) {
          hit = &c;
          break;
        }
      if (!hit) break;
      SymbolId s = hit->symbol;
      std::uint32_t d = hit->minimal_polynomial.degree_in(s);
      std::vector<std::vector<ParamPoly>> m(d, std::vector<ParamPoly>(d));
      ParamPoly col = den_;
      ParamPoly sv = ParamPoly::variable(s);
      for (std::uint32_t k = 0; k < d; ++k) {
        auto cs = col.coefficients_in(s);
        for (auto& [e, c] : cs) m[e][k] = c;
        col = ctx_->reduce(col * sv);
      }
      // First column of the adjugate: cofactors C_{0,i}.
      ParamPoly f;
      for (std::uint32_t i = 0; i < d; ++i) {
        std::vector<std::vector<ParamPoly>> minor;
        for (std::uint32_t r = 1; r < d; ++r) {
          std::vector<ParamPoly> row;
          for (std::uint32_t k = 0; k < d; ++k)
            if (k != i) row.push_back(m[r][k]);
          minor.push_back(std::move(row));
        }
        ParamPoly cof = determinant(std::move(minor), *ctx_);
        if (i % 2) cof = -cof;
        f += cof * ParamPoly::monomial(ParamMonomial::variable(s, i), Rational(1));
      }
      num_ = ctx_->reduce(num_ * f);
      den_ = ctx_->reduce(den_ * f);
      if (den_.is_zero()) throw DivisionByZero();
    }
  }
  if (num_.is_zero()) {
    den_ = ParamPoly(1L);
    return;
  }
  if (den_.is_constant()) {
    if (den_.constant_value() != 1) {
      num_ = num_.scaled(Rational(1) / den_.constant_value());
      den_ = ParamPoly(1L);
    }
    return;
  }
  if (den_.is_monomial()) {
    ParamMonomial g = den_.leading_monomial().gcd(num_.monomial_content());
    Rational lc = den_.leading_coefficient();
    if (!g.is_one()) {
      num_ = *num_.divide_exact(ParamPoly::monomial(g, Rational(1)));
      den_ = *den_.divide_exact(ParamPoly::monomial(g, Rational(1)));
    }
    if (lc != 1) {
      num_ = num_.scaled(Rational(1) / lc);
      den_ = den_.scaled(Rational(1) / lc);
    }
    return;
  }
  ParamPoly g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
  }
  Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    num_ = num_.scaled(Rational(1) / lc);
    den_ = den_.scaled(Rational(1) / lc);
  }
}

bool Scalar::is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_value() == 1; }

Rational Scalar::rational_value() const {
  if (!is_rational()) throw std::logic_error("scalar is not rational: " + to_string());
  return num_.constant_value() / den_.constant_value();
}

std::vector<SymbolId> Scalar::symbols() const {
  std::set<SymbolId> s;
  for (auto x : num_.symbols()) s.insert(x);
  for (auto x : den_.symbols()) s.insert(x);
  return {s.begin(), s.end()};
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (o.is_zero()) return ctx_ == o.ctx_ || !o.ctx_ ? *this : with_context(merge_contexts(ctx_, o.ctx_));
  if (is_zero()) return !ctx_ || ctx_ == o.ctx_ ? o : o.with_context(merge_contexts(ctx_, o.ctx_));
  ConstraintsPtr ctx = merge_contexts(ctx_, o.ctx_);
  if (den_ == o.den_) {
    Scalar r;
    r.ctx_ = ctx;
    r.num_ = num_ + o.num_;
    r.den_ = den_;
    if (den_.is_constant()) {
      if (r.num_.is_zero()) r.den_ = ParamPoly(1L);
      return r;
    }
    r.normalize();
    return r;
  }
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_, ctx);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  ConstraintsPtr ctx = merge_contexts(ctx_, o.ctx_);
  if (is_zero() || o.is_zero()) {
    Scalar z;
    z.ctx_ = ctx;
    return z;
  }
  if (den_.is_constant() && o.den_.is_constant()) {
    Scalar r;
    r.ctx_ = ctx;
    r.num_ = num_ * o.num_;
    if (ctx && !ctx->empty()) r.num_ = ctx->reduce(r.num_);
    return r;
  }
  return Scalar(num_ * o.num_, den_ * o.den_, ctx);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Scalar(den_, num_, ctx_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw DivisionByZero();
  ConstraintsPtr ctx = merge_contexts(ctx_, o.ctx_);
  if (o.is_rational()) {
    Scalar r = *this;
    r.ctx_ = ctx;
    r.num_ = r.num_.scaled(Rational(1) / o.rational_value());
    return r;
  }
  return Scalar(num_ * o.den_, den_ * o.num_, ctx);
}

Scalar Scalar::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar result(1L), base = *this;
  result.ctx_ = ctx_;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

bool Scalar::operator==(const Scalar& o) const {
  if (den_ == o.den_) {
    if (num_ == o.num_) return true;
    ConstraintsPtr ctx = merge_contexts(ctx_, o.ctx_);
    ParamPoly diff = num_ - o.num_;
    if (ctx) diff = ctx->reduce(diff);
    return diff.is_zero();
  }
  ConstraintsPtr ctx = merge_contexts(ctx_, o.ctx_);
  ParamPoly diff = num_ * o.den_ - o.num_ * den_;
  if (ctx) diff = ctx->reduce(diff);
  return diff.is_zero();
}

Rational evaluate_poly(const ParamPoly& p, const std::map<SymbolId, Rational>& assignment) {
  Rational acc = 0;
  for (auto& [m, c] : p.terms()) {
    Rational t = c;
    for (auto& [s, e] : m.factors()) {
      auto it = assignment.find(s);
      if (it == assignment.end()) throw InputError("unassigned symbol " + symbol_name(s));
      Rational v;
      mpz_pow_ui(v.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
      mpz_pow_ui(v.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
      t *= v;
    }
    acc += t;
  }
  return acc;
}

Rational Scalar::evaluate(const std::map<SymbolId, Rational>& assignment) const {
  for (SymbolId s : symbols())
    if (!assignment.count(s)) throw InputError("unassigned symbol " + symbol_name(s));
  if (ctx_) {
    for (auto& c : ctx_->constraints()) {
      auto it = assignment.find(c.symbol);
      if (it == assignment.end()) continue;
      if (evaluate_poly(c.minimal_polynomial, {{c.symbol, it->second}}) != 0)
        throw InputError("value assigned to " + symbol_name(c.symbol) + " is not a root of its minimal polynomial");
    }
  }
  Rational d = evaluate_poly(den_, assignment);
  if (d == 0) throw PoleError("denominator vanishes at the given point: " + to_string());
  return evaluate_poly(num_, assignment) / d;
}

Scalar substitute_poly(const ParamPoly& p, const std::map<SymbolId, Scalar>& values, const ConstraintsPtr& ctx) {
  Scalar acc;
  acc = acc.with_context(ctx);
  std::map<std::pair<SymbolId, std::uint32_t>, Scalar> powers;
  for (auto& [m, c] : p.terms()) {
    Scalar t = Scalar(c).with_context(ctx);
    for (auto& [s, e] : m.factors()) {
      auto key = std::make_pair(s, e);
      auto it = powers.find(key);
      if (it == powers.end()) {
        auto v = values.find(s);
        Scalar base = v != values.end() ? v->second.with_context(ctx) : Scalar::symbol(s, ctx);
        it = powers.emplace(key, base.pow(e)).first;
      }
      t *= it->second;
    }
    acc += t;
  }
  return acc;
}

Scalar Scalar::substitute(const std::map<SymbolId, Scalar>& values, ConstraintsPtr ctx) const {
  if (!ctx) ctx = ctx_;
  Scalar n = substitute_poly(num_, values, ctx);
  Scalar d = substitute_poly(den_, values, ctx);
  if (d.is_zero()) throw PoleError("denominator vanishes under substitution: " + to_string());
  return n / d;
}

std::string Scalar::to_string() const {
  std::string n = num_.to_string();
  if (den_.is_constant()) return n;
  if (num_.terms().size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  bool simple = den_.is_monomial() && den_.leading_coefficient() == 1 && den_.leading_monomial().factors().size() == 1 &&
                den_.leading_monomial().total_degree() == 1;
  return n + "/" + (simple ? d : "(" + d + ")");
}

}  // namespace ncalg
