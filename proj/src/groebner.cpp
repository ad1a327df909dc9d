#include "ncalg/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "ncalg/errors.hpp"

namespace ncalg {

namespace {

using Exps = std::vector<std::uint32_t>;

struct Ring {
  std::vector<SymbolId> symbols;
  std::unordered_map<SymbolId, std::size_t> index;

  explicit Ring(const std::vector<SymbolId>& syms) : symbols(syms) {
    for (std::size_t i = 0; i < syms.size(); ++i) index.emplace(syms[i], i);
  }

  // grevlex with index 0 the largest variable
  static bool greater(const Exps& a, const Exps& b) {
    std::uint32_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

struct DTerm {
  Exps exps;
  Rational coeff;
};

using DPoly = std::vector<DTerm>;  // descending

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exps lcm(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exps quotient(const Exps& big, const Exps& small) {
  Exps r(big.size());
  for (std::size_t i = 0; i < big.size(); ++i) r[i] = big[i] - small[i];
  return r;
}

bool coprime(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

DPoly to_dense(const ParamPoly& p, const Ring& ring) {
  DPoly out;
  out.reserve(p.terms().size());
  for (auto& [m, c] : p.terms()) {
    Exps e(ring.symbols.size(), 0);
    for (auto& [s, k] : m.factors()) {
      auto it = ring.index.find(s);
      if (it == ring.index.end()) throw InputError("symbol " + symbol_name(s) + " not in the Groebner symbol list");
      e[it->second] = k;
    }
    out.push_back({std::move(e), c});
  }
  std::sort(out.begin(), out.end(), [](const DTerm& x, const DTerm& y) { return Ring::greater(x.exps, y.exps); });
  return out;
}

ParamPoly to_sparse(const DPoly& p, const Ring& ring) {
  std::vector<ParamPoly::Term> terms;
  for (auto& t : p) {
    std::vector<ParamMonomial::Factor> f;
    for (std::size_t i = 0; i < t.exps.size(); ++i)
      if (t.exps[i]) f.emplace_back(ring.symbols[i], t.exps[i]);
    terms.emplace_back(ParamMonomial::from_factors(std::move(f)), t.coeff);
  }
  return ParamPoly::from_terms(std::move(terms));
}

// a - c * x^m * b
DPoly sub_mul(const DPoly& a, const Rational& c, const Exps& m, const DPoly& b) {
  DPoly out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Exps shifted;
  auto shifted_at = [&](std::size_t k) {
    Exps e = b[k].exps;
    for (std::size_t v = 0; v < e.size(); ++v) e[v] += m[v];
    return e;
  };
  Exps bj;
  bool have_bj = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_bj) {
      bj = shifted_at(j);
      have_bj = true;
    }
    if (j >= b.size() || (i < a.size() && Ring::greater(a[i].exps, bj))) {
      out.push_back(a[i++]);
    } else if (i >= a.size() || Ring::greater(bj, a[i].exps)) {
      out.push_back({bj, -c * b[j].coeff});
      ++j;
      have_bj = false;
    } else {
      Rational v = a[i].coeff - c * b[j].coeff;
      if (v != 0) out.push_back({a[i].exps, v});
      ++i;
      ++j;
      have_bj = false;
    }
  }
  return out;
}

void make_monic(DPoly& p) {
  if (p.empty()) return;
  Rational lc = p[0].coeff;
  if (lc == 1) return;
  for (auto& t : p) t.coeff /= lc;
}

// Full reduction of f by the (monic) basis polynomials.
DPoly reduce_full(DPoly f, const std::vector<DPoly>& basis, const std::vector<bool>* active = nullptr) {
  DPoly rem;
  while (!f.empty()) {
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (active && !(*active)[k]) continue;
      const DPoly& g = basis[k];
      if (divides(g[0].exps, f[0].exps)) {
        Rational c = f[0].coeff / g[0].coeff;
        f = sub_mul(f, c, quotient(f[0].exps, g[0].exps), g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.push_back(std::move(f[0]));
      f.erase(f.begin());
    }
  }
  return rem;
}

DPoly spoly(const DPoly& a, const DPoly& b) {
  Exps l = lcm(a[0].exps, b[0].exps);
  DPoly left;
  left.reserve(a.size());
  Exps qa = quotient(l, a[0].exps);
  for (auto& t : a) {
    Exps e = t.exps;
    for (std::size_t v = 0; v < e.size(); ++v) e[v] += qa[v];
    left.push_back({std::move(e), t.coeff / a[0].coeff});
  }
  return sub_mul(left, Rational(1) / b[0].coeff, quotient(l, b[0].exps), b);
}

struct Pair {
  std::size_t i, j;
  Exps lcm;
};

}  // namespace

std::vector<SymbolId> collect_symbols(const std::vector<ParamPoly>& polys) {
  std::set<SymbolId> s;
  for (auto& p : polys)
    for (auto x : p.symbols()) s.insert(x);
  return {s.begin(), s.end()};
}

GroebnerBasis buchberger(const std::vector<ParamPoly>& generators, const std::vector<SymbolId>& symbols,
                         const BuchbergerOptions& options) {
  if (generators.empty()) throw InputError("buchberger needs at least one generator");
  Ring ring(symbols);
  std::vector<DPoly> g;
  std::vector<bool> active;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> done;

  auto add = [&](DPoly p) {
    make_monic(p);
    std::size_t n = g.size();
    g.push_back(std::move(p));
    active.push_back(true);
    for (std::size_t k = 0; k < n; ++k) {
      if (!active[k]) continue;
      pairs.push_back({k, n, lcm(g[k][0].exps, g[n][0].exps)});
    }
    // Elements whose leading monomial is divisible by the new one are retired
    // from reduction (their pairs stay queued for correctness).
    for (std::size_t k = 0; k < n; ++k)
      if (active[k] && divides(g[n][0].exps, g[k][0].exps)) active[k] = false;
  };

  for (auto& gen : generators) {
    DPoly p = reduce_full(to_dense(gen, ring), g, &active);
    if (p.empty()) continue;
    if (p[0].exps == Exps(symbols.size(), 0)) return GroebnerBasis(symbols, {ParamPoly(1L)});
    add(std::move(p));
  }
  if (g.empty()) return GroebnerBasis(symbols, {});

  std::size_t reductions = 0;
  while (!pairs.empty()) {
    // Normal selection strategy: smallest lcm first.
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
      return Ring::greater(y.lcm, x.lcm);
    });
    Pair pr = *best;
    pairs.erase(best);
    done.insert({pr.i, pr.j});
    if (coprime(g[pr.i][0].exps, g[pr.j][0].exps)) continue;  // product criterion
    // Chain criterion.
    bool skip = false;
    for (std::size_t k = 0; k < g.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!divides(g[k][0].exps, pr.lcm)) continue;
      auto key = [](std::size_t x, std::size_t y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
      if (done.count(key(pr.i, k)) && done.count(key(pr.j, k))) skip = true;
    }
    if (skip) continue;
    if (++reductions > options.max_pair_reductions)
      throw BudgetExceeded("Buchberger pair budget of " + std::to_string(options.max_pair_reductions) + " exhausted");
    DPoly s = reduce_full(spoly(g[pr.i], g[pr.j]), g, &active);
    if (s.empty()) continue;
    if (s[0].exps == Exps(symbols.size(), 0)) return GroebnerBasis(symbols, {ParamPoly(1L)});
    add(std::move(s));
  }

  // Minimal then reduced basis.
  std::vector<DPoly> minimal;
  for (std::size_t k = 0; k < g.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < g.size() && !redundant; ++l) {
      if (l == k) continue;
      if (divides(g[l][0].exps, g[k][0].exps) && (g[l][0].exps != g[k][0].exps || l < k)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[k]);
  }
  std::vector<DPoly> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<DPoly> others;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(minimal[l]);
    DPoly head{minimal[k][0]};
    DPoly tail(minimal[k].begin() + 1, minimal[k].end());
    DPoly r = reduce_full(tail, others);
    head.insert(head.end(), r.begin(), r.end());
    make_monic(head);
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const DPoly& x, const DPoly& y) { return Ring::greater(y[0].exps, x[0].exps); });
  std::vector<ParamPoly> out;
  for (auto& p : reduced) out.push_back(to_sparse(p, ring));
  return GroebnerBasis(symbols, std::move(out));
}

ParamPoly GroebnerBasis::normal_form(const ParamPoly& f) const {
  Ring ring(symbols_);
  std::vector<DPoly> dense;
  for (auto& b : basis_) dense.push_back(to_dense(b, ring));
  return to_sparse(reduce_full(to_dense(f, ring), dense), ring);
}

InconsistencyResult inconsistency_certificate(const std::vector<ParamPoly>& system,
                                              const std::vector<ParamPoly>& nonvanishing,
                                              const BuchbergerOptions& options) {
  InconsistencyResult result;
  for (auto& p : system) {
    if (p.is_constant() && !p.is_zero()) {
      result.verdict = InconsistencyResult::Verdict::Inconsistent;
      result.basis = {ParamPoly(1L)};
      result.diagnostics = "system contains the nonzero constant " + p.to_string();
      return result;
    }
  }
  std::vector<ParamPoly> gens;
  for (auto& p : system)
    if (!p.is_zero()) gens.push_back(p);
  std::vector<SymbolId> symbols;
  std::vector<SymbolId> aux;
  for (auto& g : nonvanishing) {
    if (g.is_zero()) {
      result.verdict = InconsistencyResult::Verdict::Inconsistent;
      result.basis = {ParamPoly(1L)};
      result.diagnostics = "a nonvanishing condition is identically zero";
      return result;
    }
    if (g.is_constant()) continue;
    SymbolId t = fresh_symbol("_t");
    aux.push_back(t);
    gens.push_back(ParamPoly::variable(t) * g - ParamPoly(1L));
  }
  if (gens.empty()) {
    result.diagnostics = "empty system";
    return result;
  }
  // Auxiliary symbols first so they are the largest variables.
  symbols = aux;
  for (auto s : collect_symbols(gens))
    if (std::find(aux.begin(), aux.end(), s) == aux.end()) symbols.push_back(s);
  try {
    GroebnerBasis gb = buchberger(gens, symbols, options);
    result.basis = gb.basis();
    if (gb.is_unit()) {
      result.verdict = InconsistencyResult::Verdict::Inconsistent;
      result.diagnostics = "1 lies in the saturated ideal";
    } else {
      result.diagnostics = "saturated ideal is proper (" + std::to_string(gb.basis().size()) + " basis elements)";
    }
  } catch (const BudgetExceeded& e) {
    result.diagnostics = e.what();
  }
  return result;
}

}  // namespace ncalg
