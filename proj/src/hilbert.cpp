#include "ncalg/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "ncalg/errors.hpp"
#include "ncalg/normal.hpp"
#include "ncalg/symbols.hpp"

namespace ncalg {

SeriesPoly poly_mul(const SeriesPoly& a, const SeriesPoly& b) {
  SeriesPoly out;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) {
      Rational& slot = out[{ea.first + eb.first, ea.second + eb.second}];
      slot += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

SeriesExpr SeriesExpr::operator*(const SeriesExpr& o) const {
  return {bivariate || o.bivariate, poly_mul(numerator, o.numerator), poly_mul(denominator, o.denominator)};
}

namespace {

SeriesPoly one_minus(int a, int b) { return {{{0, 0}, Rational(1)}, {{a, b}, Rational(-1)}}; }

SeriesPoly power(const SeriesPoly& p, int n) {
  SeriesPoly r{{{0, 0}, Rational(1)}};
  for (int i = 0; i < n; ++i) r = poly_mul(r, p);
  return r;
}

SeriesPoly from_param_poly(const ParamPoly& p, SymbolId u, SymbolId v) {
  SeriesPoly out;
  for (auto& [m, c] : p.terms()) {
    if (m.total_degree() != m.exponent(u) + m.exponent(v))
      throw InputError("series may only use the variables t, or u and v");
    out[{static_cast<int>(m.exponent(u)), static_cast<int>(m.exponent(v))}] = c;
  }
  return out;
}

}  // namespace

SeriesExpr standard_series() {
  return {false, {{{0, 0}, Rational(1)}}, poly_mul(power(one_minus(1, 0), 3), one_minus(2, 0))};
}

SeriesExpr bigraded_series() {
  return {true, {{{0, 0}, Rational(1)}},
          poly_mul(poly_mul(power(one_minus(1, 0), 2), one_minus(0, 1)), one_minus(1, 1))};
}

SeriesExpr series_polynomial(const SeriesPoly& p, bool bivariate) { return {bivariate, p, {{{0, 0}, Rational(1)}}}; }

SeriesExpr parse_series(std::string_view text) {
  std::string s(text);
  bool has_t = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool left = i == 0 || !(std::isalnum(static_cast<unsigned char>(s[i - 1])) || s[i - 1] == '_');
    bool right = i + 1 == s.size() || !(std::isalnum(static_cast<unsigned char>(s[i + 1])) || s[i + 1] == '_');
    if (s[i] == 't' && left && right) has_t = true;
  }
  ScalarScope scope;
  scope.allowed = has_t ? std::set<std::string>{"t"} : std::set<std::string>{"u", "v"};
  Scalar f = parse_scalar(text, scope);
  SymbolId u = intern_symbol(has_t ? "t" : "u");
  SymbolId v = intern_symbol("v");
  SeriesExpr e;
  e.bivariate = !has_t;
  e.numerator = from_param_poly(f.numerator(), u, v);
  e.denominator = from_param_poly(f.denominator(), u, v);
  return e;
}

Rational CoeffTable::at(int n) const { return at(Bidegree{n, 0}); }

Rational CoeffTable::at(Bidegree b) const {
  auto it = coeffs.find(b);
  return it == coeffs.end() ? Rational(0) : it->second;
}

Rational CoeffTable::total(int n) const {
  if (!bivariate) return at(n);
  Rational s = 0;
  for (int a = 0; a <= n; ++a) s += at(Bidegree{a, n - a});
  return s;
}

CoeffTable expand(const SeriesExpr& series, int bound) {
  auto c0 = series.denominator.find({0, 0});
  if (c0 == series.denominator.end() || c0->second == 0)
    throw InputError("series denominator has zero constant term");
  CoeffTable t;
  t.bivariate = series.bivariate;
  t.bound = bound;
  Rational inv = 1 / c0->second;
  for (int n = 0; n <= bound; ++n) {
    for (int a = series.bivariate ? 0 : n; a <= n; ++a) {
      Bidegree key{a, series.bivariate ? n - a : 0};
      Rational acc = 0;
      auto nt = series.numerator.find(key);
      if (nt != series.numerator.end()) acc = nt->second;
      for (auto& [e, c] : series.denominator) {
        if (e == Bidegree{0, 0} || e.first > key.first || e.second > key.second) continue;
        auto prev = t.coeffs.find({key.first - e.first, key.second - e.second});
        if (prev != t.coeffs.end()) acc -= c * prev->second;
      }
      acc *= inv;
      if (acc != 0) t.coeffs[key] = acc;
    }
  }
  return t;
}

std::string HilbertReport::summary() const {
  std::ostringstream os;
  if (pass) {
    os << "counts match through degree " << bound;
  } else if (first_mismatch) {
    os << "first mismatch at ";
    if (bivariate) os << "bidegree (" << first_mismatch->first << "," << first_mismatch->second << ")";
    else os << "degree " << first_mismatch->first;
    os << ": expected " << to_string(expected) << ", counted " << actual;
  }
  return os.str();
}

HilbertReport hilbert_check(const RewriteSystem& completed, int bound, const SeriesExpr& series) {
  HilbertReport rep;
  rep.bound = bound;
  rep.bivariate = series.bivariate;
  rep.counts = irreducible_counts_bigraded(completed, bound);
  for (auto& c : completed.side_conditions) rep.side_conditions.push_back(c.to_string());
  CoeffTable table = expand(series, bound);
  for (int d = 0; d <= bound; ++d) {
    const auto& row = rep.counts[static_cast<std::size_t>(d)];
    if (series.bivariate) {
      for (int a = 0; a <= d; ++a) {
        Rational want = table.at(Bidegree{a, d - a});
        long got = row[static_cast<std::size_t>(a)];
        if (want != got) {
          rep.first_mismatch = Bidegree{a, d - a};
          rep.expected = want;
          rep.actual = got;
          return rep;
        }
      }
    } else {
      long got = 0;
      for (long x : row) got += x;
      Rational want = table.at(d);
      if (want != got) {
        rep.first_mismatch = Bidegree{d, 0};
        rep.expected = want;
        rep.actual = got;
        return rep;
      }
    }
  }
  rep.pass = true;
  return rep;
}

HilbertReport hilbert_check(const Presentation& pres, int bound, const SeriesExpr& series,
                            const CompletionOptions& options) {
  auto done = complete(pres, bound, options);
  return hilbert_check(done.system, bound, series);
}

bool euler_check(const std::vector<std::vector<int>>& shifts, const SeriesExpr& series) {
  if (shifts.empty()) return true;
  if (series.bivariate) throw InputError("euler_check needs a single-graded series");
  int maxshift = 0;
  for (auto& v : shifts)
    for (int s : v) maxshift = std::max(maxshift, s);
  int bound = 2 * maxshift + 4;
  CoeffTable h = expand(series, bound);
  // 1 - sum_i (-1)^i P_i(t) h(t), where P_i = sum over summands of t^shift.
  std::vector<Rational> total(static_cast<std::size_t>(bound) + 1, Rational(0));
  total[0] = 1;
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    int sign = i % 2 == 0 ? -1 : 1;
    for (int s : shifts[i])
      for (int n = s; n <= bound; ++n) total[static_cast<std::size_t>(n)] += sign * h.at(n - s);
  }
  return std::all_of(total.begin(), total.end(), [](const Rational& r) { return r == 0; });
}

std::string QuotientSeriesReport::summary() const {
  if (!precondition_ok) return "precondition violated: " + precondition_message;
  std::ostringstream os;
  os << "quotient counts";
  for (long c : quotient_counts) os << " " << c;
  os << "; (1-t^" << degree << ")h_A " << (matches_expected ? "matches" : "does not match");
  if (first_mismatch) os << " (first mismatch at degree " << *first_mismatch << ")";
  os << "; 1/(1-t^3) " << (matches_one_minus_t_cubed ? "matches" : "does not match");
  os << "; 1/(1-t)^3 " << (matches_one_minus_t_all_cubed ? "matches" : "does not match");
  return os.str();
}

QuotientSeriesReport quotient_series_check(const Presentation& pres, const NcPoly& z, int bound,
                                           const CompletionOptions& options) {
  QuotientSeriesReport rep;
  if (z.is_zero() || !z.is_bihomogeneous(pres.alphabet)) {
    rep.precondition_message = "element must be nonzero and bihomogeneous";
    return rep;
  }
  rep.degree = z.leading_word().degree;
  auto base = complete(pres, std::max(bound, rep.degree + 2), options);
  auto nr = verify_normal(z, base.system);
  if (!nr.normal()) {
    rep.precondition_message = "element is not normal: " + nr.failure;
    return rep;
  }
  rep.precondition_ok = true;
  std::vector<long> h;
  for (int d = 0; d <= bound; ++d) h.push_back(static_cast<long>(irreducible_words(base.system, d).size()));
  auto quot = complete(quotient(pres, {z}), bound, options);
  for (int d = 0; d <= bound; ++d)
    rep.quotient_counts.push_back(static_cast<long>(irreducible_words(quot.system, d).size()));
  rep.matches_expected = true;
  for (int d = 0; d <= bound; ++d) {
    long want = h[static_cast<std::size_t>(d)] - (d >= rep.degree ? h[static_cast<std::size_t>(d - rep.degree)] : 0);
    if (want != rep.quotient_counts[static_cast<std::size_t>(d)]) {
      rep.matches_expected = false;
      rep.first_mismatch = d;
      break;
    }
  }
  CoeffTable cubed = expand({false, {{{0, 0}, Rational(1)}}, one_minus(3, 0)}, bound);
  CoeffTable all_cubed = expand({false, {{{0, 0}, Rational(1)}}, power(one_minus(1, 0), 3)}, bound);
  rep.matches_one_minus_t_cubed = true;
  rep.matches_one_minus_t_all_cubed = true;
  for (int d = 0; d <= bound; ++d) {
    long got = rep.quotient_counts[static_cast<std::size_t>(d)];
    if (cubed.at(d) != got) rep.matches_one_minus_t_cubed = false;
    if (all_cubed.at(d) != got) rep.matches_one_minus_t_all_cubed = false;
  }
  return rep;
}

}  // namespace ncalg
