#include "ncalg/param_poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ncalg {

std::string to_string(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------------------
// ParamMonomial

ParamMonomial ParamMonomial::variable(SymbolId s, std::uint32_t exponent) {
  ParamMonomial m;
  if (exponent) m.factors_.emplace_back(s, exponent);
  return m;
}

ParamMonomial ParamMonomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  ParamMonomial m;
  for (auto& [s, e] : factors) {
    if (!e) continue;
    if (!m.factors_.empty() && m.factors_.back().first == s)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(s, e);
  }
  return m;
}

std::uint32_t ParamMonomial::total_degree() const {
  std::uint32_t d = 0;
  for (auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t ParamMonomial::exponent(SymbolId s) const {
  for (auto& f : factors_) {
    if (f.first == s) return f.second;
    if (f.first > s) break;
  }
  return 0;
}

ParamMonomial ParamMonomial::operator*(const ParamMonomial& other) const {
  ParamMonomial r;
  r.factors_.reserve(factors_.size() + other.factors_.size());
  auto i = factors_.begin(), j = other.factors_.begin();
  while (i != factors_.end() || j != other.factors_.end()) {
    if (j == other.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      r.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return r;
}

bool ParamMonomial::divides(const ParamMonomial& other) const {
  auto j = other.factors_.begin();
  for (auto& [s, e] : factors_) {
    while (j != other.factors_.end() && j->first < s) ++j;
    if (j == other.factors_.end() || j->first != s || j->second < e) return false;
  }
  return true;
}

ParamMonomial ParamMonomial::quotient_of(const ParamMonomial& other) const {
  ParamMonomial r;
  auto i = factors_.begin();
  for (auto& [s, e] : other.factors_) {
    std::uint32_t mine = 0;
    while (i != factors_.end() && i->first < s) ++i;
    if (i != factors_.end() && i->first == s) mine = i->second;
    if (e > mine) r.factors_.emplace_back(s, e - mine);
  }
  return r;
}

ParamMonomial ParamMonomial::gcd(const ParamMonomial& other) const {
  ParamMonomial r;
  auto j = other.factors_.begin();
  for (auto& [s, e] : factors_) {
    while (j != other.factors_.end() && j->first < s) ++j;
    if (j != other.factors_.end() && j->first == s) r.factors_.emplace_back(s, std::min(e, j->second));
  }
  return r;
}

ParamMonomial ParamMonomial::lcm(const ParamMonomial& other) const {
  ParamMonomial r;
  auto i = factors_.begin(), j = other.factors_.begin();
  while (i != factors_.end() || j != other.factors_.end()) {
    if (j == other.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      r.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.emplace_back(i->first, std::max(i->second, j->second));
      ++i;
      ++j;
    }
  }
  return r;
}

ParamMonomial ParamMonomial::without(SymbolId s) const {
  ParamMonomial r;
  for (auto& f : factors_)
    if (f.first != s) r.factors_.push_back(f);
  return r;
}

bool grevlex_greater(const ParamMonomial& a, const ParamMonomial& b) {
  auto da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  // Walk from the largest symbol id (the smallest variable) downwards.
  auto& fa = a.factors();
  auto& fb = b.factors();
  auto i = fa.rbegin(), j = fb.rbegin();
  while (i != fa.rend() || j != fb.rend()) {
    if (j == fb.rend() || (i != fa.rend() && i->first > j->first)) {
      return false;  // a has positive exponent where b has zero
    }
    if (i == fa.rend() || j->first > i->first) {
      return true;
    }
    if (i->second != j->second) return i->second < j->second;
    ++i;
    ++j;
  }
  return false;
}

std::string to_string(const ParamMonomial& m) {
  std::string s;
  for (auto& [sym, e] : m.factors()) {
    if (!s.empty()) s += "*";
    s += symbol_name(sym);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------------------
// ParamPoly

ParamPoly::ParamPoly(long value) {
  if (value != 0) terms_.emplace_back(ParamMonomial{}, Rational(value));
}

ParamPoly::ParamPoly(const Rational& value) {
  if (value != 0) terms_.emplace_back(ParamMonomial{}, value);
}

ParamPoly ParamPoly::constant(const Rational& value) { return ParamPoly(value); }

ParamPoly ParamPoly::variable(SymbolId s) {
  ParamPoly p;
  p.terms_.emplace_back(ParamMonomial::variable(s), Rational(1));
  return p;
}

ParamPoly ParamPoly::monomial(ParamMonomial m, Rational c) {
  ParamPoly p;
  if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
  return p;
}

ParamPoly ParamPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grevlex_greater(x.first, y.first); });
  ParamPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rational ParamPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("constant_value of non-constant polynomial");
  return terms_[0].second;
}

Rational ParamPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return Rational(0);
}

std::uint32_t ParamPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().first.total_degree();
}

std::uint32_t ParamPoly::degree_in(SymbolId s) const {
  std::uint32_t d = 0;
  for (auto& t : terms_) d = std::max(d, t.first.exponent(s));
  return d;
}

std::vector<SymbolId> ParamPoly::symbols() const {
  std::set<SymbolId> out;
  for (auto& t : terms_)
    for (auto& f : t.first.factors()) out.insert(f.first);
  return {out.begin(), out.end()};
}

bool ParamPoly::contains(SymbolId s) const {
  for (auto& t : terms_)
    if (t.first.contains(s)) return true;
  return false;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

ParamPoly merge(const ParamPoly& a, const ParamPoly& b, bool subtract) {
  std::vector<ParamPoly::Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  auto i = a.terms().begin(), j = b.terms().begin();
  while (i != a.terms().end() || j != b.terms().end()) {
    if (j == b.terms().end() || (i != a.terms().end() && grevlex_greater(i->first, j->first))) {
      out.push_back(*i++);
    } else if (i == a.terms().end() || grevlex_greater(j->first, i->first)) {
      out.emplace_back(j->first, subtract ? Rational(-j->second) : j->second);
      ++j;
    } else {
      Rational c = subtract ? Rational(i->second - j->second) : Rational(i->second + j->second);
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return ParamPoly::from_sorted_terms(std::move(out));
}

}  // namespace

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  return merge(*this, o, false);
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return -o;
  return merge(*this, o, true);
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.is_constant()) return scaled(o.terms_[0].second);
  if (is_constant()) return o.scaled(terms_[0].second);
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (auto& a : terms_)
    for (auto& b : o.terms_) out.emplace_back(a.first * b.first, a.second * b.second);
  return from_terms(std::move(out));
}

ParamPoly ParamPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

ParamPoly ParamPoly::times_monomial(const ParamMonomial& m, const Rational& c) const {
  if (c == 0) return {};
  ParamPoly r;
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the monomial order.
  for (auto& t : terms_) r.terms_.emplace_back(t.first * m, t.second * c);
  return r;
}

ParamPoly ParamPoly::pow(unsigned n) const {
  ParamPoly result(1L), base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return ParamPoly{};
  if (divisor.is_constant()) return scaled(Rational(1) / divisor.terms_[0].second);
  std::vector<Term> quotient;
  ParamPoly rem = *this;
  const auto& lm = divisor.leading_monomial();
  const auto& lc = divisor.leading_coefficient();
  while (!rem.is_zero()) {
    if (!lm.divides(rem.leading_monomial())) return std::nullopt;
    ParamMonomial qm = lm.quotient_of(rem.leading_monomial());
    Rational qc = rem.leading_coefficient() / lc;
    rem -= divisor.times_monomial(qm, qc);
    quotient.emplace_back(std::move(qm), std::move(qc));
  }
  return from_terms(std::move(quotient));
}

std::map<std::uint32_t, ParamPoly> ParamPoly::coefficients_in(SymbolId s) const {
  std::map<std::uint32_t, std::vector<Term>> buckets;
  for (auto& t : terms_) buckets[t.first.exponent(s)].emplace_back(t.first.without(s), t.second);
  std::map<std::uint32_t, ParamPoly> out;
  for (auto& [e, ts] : buckets) out.emplace(e, from_terms(std::move(ts)));
  return out;
}

ParamPoly ParamPoly::from_coefficients_in(SymbolId s, const std::map<std::uint32_t, ParamPoly>& coeffs) {
  std::vector<Term> out;
  for (auto& [e, c] : coeffs)
    for (auto& t : c.terms()) out.emplace_back(t.first * ParamMonomial::variable(s, e), t.second);
  return from_terms(std::move(out));
}

ParamMonomial ParamPoly::monomial_content() const {
  if (terms_.empty()) return {};
  ParamMonomial g = terms_[0].first;
  for (auto& t : terms_) {
    g = g.gcd(t.first);
    if (g.is_one()) break;
  }
  return g;
}

ParamPoly ParamPoly::monic() const {
  if (is_zero()) return {};
  return scaled(Rational(1) / leading_coefficient());
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    Rational mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << ncalg::to_string(m);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// GCD: recursive primitive PRS

namespace {

using Coeffs = std::map<std::uint32_t, ParamPoly>;

std::uint32_t deg_of(const Coeffs& c) { return c.empty() ? 0 : c.rbegin()->first; }

ParamPoly content_in(const ParamPoly& f, SymbolId v) {
  ParamPoly g;
  for (auto& [e, c] : f.coefficients_in(v)) {
    g = gcd(g, c);
    if (g.is_constant()) return ParamPoly(1L);
  }
  return g;
}

ParamPoly primitive_part_in(const ParamPoly& f, SymbolId v) {
  if (f.is_zero()) return f;
  ParamPoly c = content_in(f, v);
  auto q = f.divide_exact(c);
  if (!q) throw std::logic_error("content does not divide polynomial");
  return *q;
}

// Pseudo-remainder of a by b as polynomials in v.
ParamPoly pseudo_remainder(const ParamPoly& a, const ParamPoly& b, SymbolId v) {
  Coeffs bc = b.coefficients_in(v);
  std::uint32_t db = deg_of(bc);
  const ParamPoly lcb = bc.rbegin()->second;
  ParamPoly r = a;
  while (!r.is_zero()) {
    Coeffs rc = r.coefficients_in(v);
    std::uint32_t dr = deg_of(rc);
    if (dr < db) break;
    ParamPoly lcr = rc.rbegin()->second;
    ParamPoly shift = ParamPoly::monomial(ParamMonomial::variable(v, dr - db), Rational(1));
    r = lcb * r - lcr * shift * b;
  }
  return r;
}

ParamPoly normalise_unit(const ParamPoly& p) { return p.monic(); }

}  // namespace

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return normalise_unit(b);
  if (b.is_zero()) return normalise_unit(a);
  if (a.is_constant() || b.is_constant()) return ParamPoly(1L);
  if (a == b) return normalise_unit(a);
  if (a.is_monomial() || b.is_monomial()) {
    const ParamPoly& m = a.is_monomial() ? a : b;
    const ParamPoly& other = a.is_monomial() ? b : a;
    return ParamPoly::monomial(m.leading_monomial().gcd(other.monomial_content()), Rational(1));
  }
  auto sa = a.symbols(), sb = b.symbols();
  // A symbol present in only one argument cannot occur in the gcd.
  for (SymbolId s : sa) {
    if (!std::binary_search(sb.begin(), sb.end(), s)) {
      ParamPoly g = b;
      for (auto& [e, c] : a.coefficients_in(s)) {
        g = gcd(g, c);
        if (g.is_constant()) return ParamPoly(1L);
      }
      return normalise_unit(g);
    }
  }
  for (SymbolId s : sb) {
    if (!std::binary_search(sa.begin(), sa.end(), s)) {
      ParamPoly g = a;
      for (auto& [e, c] : b.coefficients_in(s)) {
        g = gcd(g, c);
        if (g.is_constant()) return ParamPoly(1L);
      }
      return normalise_unit(g);
    }
  }
  // Same symbol set. Pick the symbol of lowest degree as main variable.
  SymbolId v = sa.front();
  std::uint32_t best = ~0u;
  for (SymbolId s : sa) {
    std::uint32_t d = std::max(a.degree_in(s), b.degree_in(s));
    if (d < best) {
      best = d;
      v = s;
    }
  }
  ParamPoly ca = content_in(a, v), cb = content_in(b, v);
  ParamPoly pa = *a.divide_exact(ca), pb = *b.divide_exact(cb);
  ParamPoly gc = gcd(ca, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (!pb.is_zero() && pb.degree_in(v) > 0) {
    ParamPoly r = pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    pb = r.is_zero() ? r : primitive_part_in(r, v);
  }
  ParamPoly g;
  if (pb.is_zero())
    g = primitive_part_in(pa, v);
  else
    g = ParamPoly(1L);  // the PRS ended in a nonzero constant in v
  return normalise_unit(gc * g);
}

ParamPoly remainder_in(const ParamPoly& f, const ParamPoly& modulus, SymbolId s) {
  std::uint32_t dm = modulus.degree_in(s);
  if (f.degree_in(s) < dm) return f;
  Coeffs mc = modulus.coefficients_in(s);
  // Require monic in s with a rational leading coefficient.
  const ParamPoly& lead = mc.rbegin()->second;
  if (!lead.is_constant()) throw std::invalid_argument("modulus must have a constant leading coefficient");
  ParamPoly monic_mod = modulus.scaled(Rational(1) / lead.constant_value());
  Coeffs fc = f.coefficients_in(s);
  // Reduce from the top exponent down.
  while (!fc.empty() && fc.rbegin()->first >= dm) {
    auto top = std::prev(fc.end());
    std::uint32_t e = top->first;
    ParamPoly c = top->second;
    fc.erase(top);
    for (auto& [me, mcoef] : monic_mod.coefficients_in(s)) {
      if (me == dm) continue;
      std::uint32_t target = e - dm + me;
      ParamPoly add = -(c * mcoef);
      auto it = fc.find(target);
      if (it == fc.end()) {
        if (!add.is_zero()) fc.emplace(target, add);
      } else {
        it->second += add;
        if (it->second.is_zero()) fc.erase(it);
      }
    }
  }
  return ParamPoly::from_coefficients_in(s, fc);
}

}  // namespace ncalg
