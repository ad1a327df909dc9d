#include "ncalg/presentation.hpp"

#include <algorithm>
#include <set>

#include "ncalg/errors.hpp"
#include "ncalg/symbols.hpp"

namespace ncalg {

Alphabet standard_alphabet() { return Alphabet({{"x1", {1, 0}}, {"x2", {1, 0}}, {"x3", {0, 1}}}); }

ScalarScope Presentation::scope() const {
  ScalarScope s;
  s.allowed = std::set<std::string>(parameters.begin(), parameters.end());
  s.ctx = ctx;
  return s;
}

std::string Presentation::label(std::size_t i) const {
  return i < labels.size() && !labels[i].empty() ? labels[i] : "r" + std::to_string(i + 1);
}

std::vector<SymbolId> Presentation::parameter_ids() const {
  std::vector<SymbolId> ids;
  for (auto& p : parameters) ids.push_back(intern_symbol(p));
  return ids;
}

NcPoly Presentation::parse(std::string_view text) const { return parse_ncpoly(text, alphabet, scope()); }

bool Presentation::is_numeric() const {
  for (auto& rel : relations)
    for (auto& [w, c] : rel.terms())
      for (SymbolId s : c.symbols())
        if (!ctx || !ctx->constrains(s)) return false;
  return true;
}

void Presentation::validate() const {
  std::set<SymbolId> declared;
  for (auto& p : parameters) declared.insert(intern_symbol(p));
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (relations[i].is_zero()) throw InputError("relation " + label(i) + " is zero");
    if (!relations[i].is_bihomogeneous(alphabet)) throw InputError("relation " + label(i) + " is not bihomogeneous");
    for (auto& [w, c] : relations[i].terms())
      for (SymbolId s : c.symbols())
        if (!declared.count(s))
          throw InputError("relation " + label(i) + " uses undeclared symbol '" + symbol_name(s) + "'");
  }
  for (auto& c : constraints)
    if (!declared.count(c.symbol)) throw InputError("constraint on undeclared symbol '" + symbol_name(c.symbol) + "'");
}

RewriteSystem Presentation::system() const {
  std::vector<std::string> ls;
  for (std::size_t i = 0; i < relations.size(); ++i) ls.push_back(label(i));
  RewriteSystem sys = make_system(alphabet, relations, ls);
  sys.add_side_conditions(nonvanishing);
  return sys;
}

Presentation make_presentation(std::string name, const std::vector<std::string>& relations,
                               const std::vector<std::string>& parameters,
                               const std::vector<std::pair<std::string, std::string>>& constraints,
                               const std::vector<std::string>& nonvanishing) {
  return make_presentation(std::move(name), standard_alphabet(), relations, parameters, constraints, nonvanishing);
}

Presentation make_presentation(std::string name, const Alphabet& alphabet, const std::vector<std::string>& relations,
                               const std::vector<std::string>& parameters,
                               const std::vector<std::pair<std::string, std::string>>& constraints,
                               const std::vector<std::string>& nonvanishing) {
  Presentation p;
  p.name = std::move(name);
  p.alphabet = alphabet;
  p.parameters = parameters;
  ScalarScope bare;
  bare.allowed = std::set<std::string>(parameters.begin(), parameters.end());
  for (auto& [sym, poly] : constraints)
    p.constraints.push_back({intern_symbol(sym), parse_poly(poly, bare)});
  p.ctx = make_constraints(p.constraints);
  if (p.ctx) p.constraints = p.ctx->constraints();
  for (auto& r : relations) p.relations.push_back(p.parse(r));
  for (auto& nv : nonvanishing) p.nonvanishing.push_back(parse_poly(nv, p.scope()));
  p.validate();
  return p;
}

Presentation opposite(const Presentation& p) {
  Presentation o = p;
  o.name = "op(" + p.name + ")";
  for (auto& r : o.relations) r = opposite(r);
  return o;
}

Presentation substitute(const Presentation& p, const std::map<std::string, Scalar>& values) {
  std::map<SymbolId, Scalar> vals;
  for (auto& [name, v] : values) {
    if (std::find(p.parameters.begin(), p.parameters.end(), name) == p.parameters.end())
      throw InputError("presentation " + p.name + " has no parameter '" + name + "'");
    SymbolId s = intern_symbol(name);
    if (p.ctx && p.ctx->constrains(s)) throw InputError("parameter '" + name + "' is an algebraic constant");
    vals.emplace(s, v);
  }
  Presentation q = p;
  ConstraintsPtr ctx = p.ctx;
  for (auto& [s, v] : vals) ctx = merge_contexts(ctx, v.context());
  std::set<SymbolId> introduced;
  for (auto& [s, v] : vals)
    for (SymbolId t : v.symbols()) introduced.insert(t);
  q.parameters.clear();
  for (auto& name : p.parameters)
    if (!values.count(name)) q.parameters.push_back(name);
  for (SymbolId t : introduced)
    if (std::find(q.parameters.begin(), q.parameters.end(), symbol_name(t)) == q.parameters.end())
      q.parameters.push_back(symbol_name(t));
  q.ctx = ctx;
  q.constraints = ctx ? ctx->constraints() : std::vector<AlgebraicConstraint>{};
  q.nonvanishing.clear();
  for (auto& nv : p.nonvanishing) {
    Scalar v = substitute_poly(nv, vals, ctx);
    if (v.is_zero()) throw InputError("parameters violate the condition " + nv.to_string() + " != 0");
    if (!v.is_rational()) q.nonvanishing.push_back(v.numerator().monic());
  }
  for (auto& [s, v] : vals)
    if (!v.denominator().is_constant()) q.nonvanishing.push_back(v.denominator().monic());
  for (auto& r : q.relations) r = r.map_coefficients([&](const Scalar& c) { return c.substitute(vals, ctx); });
  return q;
}

NcPoly substitute(const NcPoly& f, const Presentation& p, const std::map<std::string, Scalar>& values) {
  Presentation tmp = p;
  tmp.relations = {f};
  tmp.labels.clear();
  return substitute(tmp, values).relations[0];
}

Presentation change_variables(const Presentation& p, const LinearMap& m) {
  Presentation q = p;
  for (auto& r : q.relations) r = apply_linear_map(r, m, p.alphabet);
  for (auto& row : m.matrix)
    for (auto& c : row)
      if (!c.denominator().is_constant()) q.nonvanishing.push_back(c.denominator().monic());
  return q;
}

Presentation quotient(const Presentation& p, const std::vector<NcPoly>& elements) {
  Presentation q = p;
  q.labels.resize(p.relations.size());
  std::size_t next = 1;
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    q.labels[i] = p.label(i);
    if (q.labels[i][0] == 'q') ++next;
  }
  for (auto& e : elements) {
    if (e.is_zero()) continue;
    if (!e.is_bihomogeneous(p.alphabet)) throw InputError("quotient element is not bihomogeneous");
    q.relations.push_back(e);
    q.labels.push_back("q" + std::to_string(next++));
  }
  return q;
}

CompletionResult complete(const Presentation& p, int degree, const CompletionOptions& options) {
  return complete(p.system(), degree, options);
}

bool same_relations(const Presentation& a, const Presentation& b) {
  if (a.relations.size() != b.relations.size()) return false;
  for (std::size_t i = 0; i < a.relations.size(); ++i) {
    const NcPoly& x = a.relations[i];
    const NcPoly& y = b.relations[i];
    if (x.is_zero() || y.is_zero()) {
      if (!(x.is_zero() && y.is_zero())) return false;
      continue;
    }
    if (x.leading_word() != y.leading_word()) return false;
    if (!(x.scaled(y.leading_coefficient()) == y.scaled(x.leading_coefficient()))) return false;
  }
  return true;
}

}  // namespace ncalg
