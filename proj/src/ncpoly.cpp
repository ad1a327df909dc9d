#include "ncalg/ncpoly.hpp"

#include <algorithm>
#include <map>

#include "ncalg/errors.hpp"
#include "ncalg/expr_parser.hpp"

namespace ncalg {

NcPoly::NcPoly(const Word& w, const Scalar& c) {
  if (!c.is_zero()) terms_.emplace_back(w, c);
}

NcPoly NcPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
  NcPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Scalar NcPoly::coefficient(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& key) { return t.first > key; });
  if (it != terms_.end() && it->first == w) return it->second;
  return Scalar();
}

std::optional<Bidegree> NcPoly::bidegree(const Alphabet& alphabet) const {
  if (terms_.empty()) return std::nullopt;
  Bidegree b = alphabet.bidegree(terms_[0].first);
  for (auto& t : terms_)
    if (alphabet.bidegree(t.first) != b) return std::nullopt;
  return b;
}

bool NcPoly::is_bihomogeneous(const Alphabet& alphabet) const { return is_zero() || bidegree(alphabet).has_value(); }

NcPoly NcPoly::operator-() const {
  NcPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

NcPoly merge(const NcPoly& a, const NcPoly& b, bool subtract) {
  std::vector<NcPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.terms().begin(), j = b.terms().begin();
  while (i != a.terms().end() || j != b.terms().end()) {
    if (j == b.terms().end() || (i != a.terms().end() && i->first > j->first)) {
      out.push_back(*i++);
    } else if (i == a.terms().end() || j->first > i->first) {
      out.emplace_back(j->first, subtract ? -j->second : j->second);
      ++j;
    } else {
      Scalar c = subtract ? i->second - j->second : i->second + j->second;
      if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return NcPoly::from_terms(std::move(out));
}

}  // namespace

NcPoly NcPoly::operator+(const NcPoly& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  return merge(*this, o, false);
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return -o;
  return merge(*this, o, true);
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
  std::vector<Term> out;
  out.reserve(size() * o.size());
  for (auto& [wa, ca] : terms_)
    for (auto& [wb, cb] : o.terms_) out.emplace_back(wa * wb, ca * cb);
  return from_terms(std::move(out));
}

NcPoly NcPoly::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  std::vector<Term> out;
  out.reserve(size());
  for (auto& [w, x] : terms_) out.emplace_back(w, x * c);
  return from_terms(std::move(out));
}

NcPoly NcPoly::left_mul(const Word& w) const {
  NcPoly r;
  r.terms_.reserve(size());
  // Left multiplication by a word preserves the order.
  for (auto& [v, c] : terms_) r.terms_.emplace_back(w * v, c);
  return r;
}

NcPoly NcPoly::right_mul(const Word& w) const {
  std::vector<Term> out;
  out.reserve(size());
  for (auto& [v, c] : terms_) out.emplace_back(v * w, c);
  return from_terms(std::move(out));
}

bool NcPoly::operator==(const NcPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].first != o.terms_[i].first || terms_[i].second != o.terms_[i].second) return false;
  return true;
}

std::string NcPoly::to_string(const Alphabet& alphabet) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [w, c] : terms_) {
    std::string cs = c.to_string();
    bool neg = false;
    if (c.denominator().is_constant() && c.numerator().terms().size() == 1 && c.numerator().leading_coefficient() < 0) {
      neg = true;
      cs = (-c).to_string();
    }
    if (!first) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    first = false;
    bool compound = c.numerator().terms().size() > 1 && c.denominator().is_constant();
    if (compound) cs = "(" + cs + ")";
    if (w.empty()) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += alphabet.to_string(w);
    }
  }
  return out;
}

LinearMap LinearMap::identity(std::size_t n) {
  LinearMap m;
  m.matrix.assign(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) m.matrix[i][i] = Scalar(1L);
  return m;
}

LinearMap LinearMap::diagonal(const std::vector<Scalar>& entries) {
  LinearMap m;
  m.matrix.assign(entries.size(), std::vector<Scalar>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) m.matrix[i][i] = entries[i];
  return m;
}

namespace {

Scalar det_rec(const std::vector<std::vector<Scalar>>& m) {
  std::size_t n = m.size();
  if (n == 0) return Scalar(1L);
  if (n == 1) return m[0][0];
  Scalar d;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Scalar>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Scalar> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Scalar t = m[0][j] * det_rec(minor);
    d = j % 2 ? d - t : d + t;
  }
  return d;
}

}  // namespace

Scalar LinearMap::determinant() const { return det_rec(matrix); }

LinearMap LinearMap::inverse() const {
  std::size_t n = size();
  std::vector<std::vector<Scalar>> a = matrix;
  LinearMap inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw DivisionByZero();
    std::swap(a[piv], a[col]);
    std::swap(inv.matrix[piv], inv.matrix[col]);
    Scalar p = a[col][col].inverse();
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] *= p;
      inv.matrix[col][k] *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Scalar f = a[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[col][k];
        inv.matrix[r][k] -= f * inv.matrix[col][k];
      }
    }
  }
  return inv;
}

LinearMap LinearMap::compose(const LinearMap& then) const {
  // x_i -> sum_j A_ij x_j -> sum_j A_ij sum_k B_jk x_k, so the product A*B.
  std::size_t n = size();
  LinearMap r;
  r.matrix.assign(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) r.matrix[i][k] += matrix[i][j] * then.matrix[j][k];
  return r;
}

bool LinearMap::preserves_bigrading(const Alphabet& alphabet) const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (!matrix[i][j].is_zero() && alphabet[i].bidegree != alphabet[j].bidegree) return false;
  return true;
}

std::vector<NcPoly> LinearMap::images(const Alphabet& alphabet) const {
  std::vector<NcPoly> out;
  for (std::size_t i = 0; i < size(); ++i) {
    NcPoly img;
    for (std::size_t j = 0; j < size(); ++j) img += NcPoly(alphabet.letter(j), matrix[i][j]);
    out.push_back(std::move(img));
  }
  return out;
}

NcPoly apply_homomorphism(const NcPoly& f, const std::vector<NcPoly>& images) {
  // Cache images of prefixes shared across terms.
  std::map<std::string, NcPoly> cache;
  NcPoly result;
  for (auto& [w, c] : f.terms()) {
    NcPoly img = NcPoly::constant(Scalar(1L));
    std::size_t start = 0;
    for (std::size_t len = w.size(); len > 0; --len) {
      auto it = cache.find(w.letters.substr(0, len));
      if (it != cache.end()) {
        img = it->second;
        start = len;
        break;
      }
    }
    for (std::size_t i = start; i < w.size(); ++i) {
      img = img * images.at(w.at(i));
      cache.emplace(w.letters.substr(0, i + 1), img);
    }
    result += img.scaled(c);
  }
  return result;
}

NcPoly apply_linear_map(const NcPoly& f, const LinearMap& m, const Alphabet& alphabet) {
  return apply_homomorphism(f, m.images(alphabet));
}

NcPoly opposite(const NcPoly& f) {
  std::vector<NcPoly::Term> out;
  for (auto& [w, c] : f.terms()) out.emplace_back(w.reversed(), c);
  return NcPoly::from_terms(std::move(out));
}

namespace {

struct NcOps {
  const Alphabet& alphabet;
  const ScalarScope& scope;

  NcPoly from_integer(const Rational& r) { return NcPoly::constant(Scalar(r).with_context(scope.ctx)); }

  NcPoly from_symbol(std::string_view name, std::size_t pos) {
    int i = alphabet.index_of(name);
    if (i >= 0) return NcPoly(alphabet.letter(static_cast<std::size_t>(i)));
    if (scope.allowed && !scope.allowed->count(std::string(name)))
      throw ParseError("unknown symbol '" + std::string(name) + "' at position " + std::to_string(pos), pos);
    return NcPoly::constant(Scalar::symbol(name, scope.ctx));
  }

  NcPoly div(const NcPoly& a, const NcPoly& b, std::size_t pos) {
    if (b.is_zero()) throw ParseError("division by zero at position " + std::to_string(pos), pos);
    if (b.size() != 1 || !b.leading_word().empty())
      throw ParseError("division by a non-scalar at position " + std::to_string(pos), pos);
    return a.scaled(b.leading_coefficient().inverse());
  }

  NcPoly pow(const NcPoly& a, long e, std::size_t pos) {
    if (e < 0) {
      if (a.size() == 1 && a.leading_word().empty())
        return NcPoly::constant(a.leading_coefficient().pow(e));
      throw ParseError("negative power of a non-scalar at position " + std::to_string(pos), pos);
    }
    NcPoly r = NcPoly::constant(Scalar(1L));
    for (long k = 0; k < e; ++k) r = r * a;
    return r;
  }
};

}  // namespace

NcPoly parse_ncpoly(std::string_view text, const Alphabet& alphabet, const ScalarScope& scope) {
  NcOps ops{alphabet, scope};
  ExprParser<NcPoly, NcOps> parser(text, ops);
  return parser.parse();
}

}  // namespace ncalg
