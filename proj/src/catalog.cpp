#include "ncalg/catalog.hpp"

#include <algorithm>
#include <set>

#include "ncalg/errors.hpp"
#include "ncalg/symbols.hpp"

namespace ncalg {

namespace {

struct FamilyDef {
  std::string id;
  std::vector<std::string> params;  // substitutable, in order
  std::vector<std::string> relations;
  std::string gamma_minpoly;  // empty when the family has no algebraic constant
  std::vector<std::string> nonvanishing;
};

// r2 shared by B, C, D, E, G.
const char* kR2 = "x3*x2 + 1/b*x3*x1 - x1*x3 - b*x2*x3";
const char* kR2F = "x3*x2 + gamma/b*x3*x1 - x1*x3 - b*x2*x3";

const std::vector<FamilyDef>& families() {
  static const std::vector<FamilyDef> defs = {
      {"A",
       {"b", "q"},
       {"x2*x1 - 1/q*x1*x2", "x3*x2 + 1/(q^2*b)*x3*x1 - x1*x3 - b*x2*x3",
        "x3^2*x1 + q^3*b^2*x1*x3^2 - (q^2 + q)*b*x3*x1*x3", "x3*x1^2 + q^3*b^2*x1^2*x3 - (q^2 + q)*b*x1*x3*x1"},
       "",
       {"b", "q", "q - 1"}},
      {"B",
       {"b"},
       {"x2*x1 + x1*x2", kR2, "x3^2*x1 - b^2*x1*x3^2", "x3*x1^2 + b^3*x1*x2*x3 - b*x1*x3*x1 - b^2*x2*x3*x1"},
       "",
       {"b"}},
      {"C",
       {"b"},
       {"x2*x1 + x1*x2", kR2, "x3^2*x1 - b^2*x1*x3^2", "x3*x1^2 - b^3*x1*x2*x3 - b*x1*x3*x1 - b^2*x2*x3*x1"},
       "",
       {"b"}},
      {"D",
       {"b", "h"},
       {"x2*x1 + x1*x2", kR2, "x3^2*x1 - b^2*x1*x3^2", "x3*x1^2 - (h/b^2 - b^2)*x1^2*x3 - h*x2^2*x3"},
       "",
       {"b"}},
      {"E",
       {"b"},
       {"x2*x1 + x1*x2", kR2, "x3^2*x1 - b^3*x2*x3^2",
        "x3*x1^2 - gamma*b^3*x1*x2*x3 - b*x1*x3*x1 - b^2*x2*x3*x1"},
       "gamma^2 + 1",
       {"b"}},
      {"F",
       {"b"},
       {"x2*x1 - gamma^2*x1*x2", kR2F, "x3^2*x1 - gamma^2*b^3*x2*x3^2 + b*x3*x1*x3",
        "x3*x1^2 - gamma*b^3*x1*x2*x3 - gamma^2*b^2*x2*x3*x1"},
       "gamma^2 + gamma + 1",
       {"b"}},
      {"Fu",
       {"b"},
       {"x2*x1 - gamma^2*x1*x2", kR2F, "x3^2*x1 - gamma^2*b^2*x1*x3^2 + b^3*x2*x3^2 + b*x3*x1*x3",
        "x3*x1^2 + b^4*x2^2*x3 - gamma^2*b*x1*x3*x1 + b^2*x2*x3*x1"},
       "gamma^2 + gamma + 1",
       {"b"}},
      {"G",
       {"b"},
       {"x2*x1 + x1*x2", kR2, "x3^2*x1 - b^3*x2*x3^2", "x3*x1^2 - b^2/(2*gamma)*x1^2*x3 - gamma*b^4*x2^2*x3"},
       "gamma^2 - gamma + 1/2",
       {"b"}},
      {"H",
       {"b"},
       {"x2*x1 - x1*x2 - x1^2", "x3*x2 - 2*b*x1*x3 - b*x2*x3", "x3^2*x1 + b^2*x1*x3^2 - 2*b*x3*x1*x3",
        "x3*x1^2 + b^2*x1^2*x3 - 2*b*x1*x3*x1"},
       "",
       {"b"}},
  };
  return defs;
}

const FamilyDef& find_family(const std::string& id) {
  for (auto& d : families())
    if (d.id == id) return d;
  throw InputError("unknown family '" + id + "'");
}

const char* kTemplateR1 = "x2*x1 - p*x1*x2 - m*x1^2";
const char* kTemplateR2 = "x3*x2 - a*x3*x1 - n*x1*x3 - b*x2*x3";
const char* kTemplateR3 = "x3^2*x1 - c*x1*x3^2 - d*x2*x3^2 - e*x3*x1*x3";
// q = 1/p and z = (a - m)/p.
const char* kTemplateR5 = "x3*x1*x2 - n/p*x1*x3*x1 - b/p*x2*x3*x1 - (a - m)/p*x3*x1^2";

std::vector<std::string> without(std::vector<std::string> v, const std::set<std::string>& drop) {
  v.erase(std::remove_if(v.begin(), v.end(), [&](const std::string& s) { return drop.count(s) > 0; }), v.end());
  return v;
}

const std::vector<std::string> kTemplateSymbols = {"p", "m", "a", "n", "b", "c", "d", "e", "f", "g", "h", "j", "k"};

std::string family_name(const FamilyDef& def, const std::map<std::string, Scalar>& params) {
  std::string name = def.id + "(";
  for (std::size_t i = 0; i < def.params.size(); ++i) {
    if (i) name += ",";
    auto it = params.find(def.params[i]);
    name += it == params.end() ? def.params[i] : it->second.to_string();
  }
  if (!def.gamma_minpoly.empty()) {
    auto it = params.find("gamma");
    name += "," + (it == params.end() ? std::string("gamma") : it->second.to_string());
  }
  return name + ")";
}

}  // namespace

std::vector<std::string> family_ids() {
  std::vector<std::string> ids;
  for (auto& d : families()) ids.push_back(d.id);
  return ids;
}

std::vector<std::string> template_ids() { return {"TL", "TK", "TH", "THzero", "TJ", "S32"}; }

bool is_family(const std::string& id) {
  auto ids = family_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

bool is_template(const std::string& id) {
  auto ids = template_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<std::string> family_parameters(const std::string& id) { return find_family(id).params; }

Presentation family(const std::string& id, const std::map<std::string, Scalar>& params) {
  const FamilyDef& def = find_family(id);
  std::vector<std::string> declared = def.params;
  std::vector<std::pair<std::string, std::string>> constraints;
  if (!def.gamma_minpoly.empty()) {
    declared.push_back("gamma");
    constraints.push_back({"gamma", def.gamma_minpoly});
  }
  Presentation p = make_presentation(def.id, def.relations, declared, constraints, def.nonvanishing);
  std::map<std::string, Scalar> rest;
  for (auto& [k, v] : params) {
    if (k != "gamma") {
      rest.emplace(k, v);
      continue;
    }
    if (def.gamma_minpoly.empty()) throw InputError("family " + id + " has no parameter 'gamma'");
    // Another root of the minimal polynomial: a Galois conjugate.
    Scalar g = v.with_context(merge_contexts(p.ctx, v.context()));
    SymbolId gs = intern_symbol("gamma");
    if (!substitute_poly(p.ctx->find(gs)->minimal_polynomial, {{gs, g}}, p.ctx).is_zero())
      throw InputError("gamma = " + v.to_string() + " is not a root of " + def.gamma_minpoly);
    for (auto& r : p.relations) r = r.map_coefficients([&](const Scalar& c) { return c.substitute({{gs, g}}, p.ctx); });
  }
  p = substitute(p, rest);
  p.name = family_name(def, params);
  return p;
}

namespace {

std::map<std::string, Scalar> parse_params(const FamilyDef& def, const std::map<std::string, std::string>& params) {
  ScalarScope scope;
  if (!def.gamma_minpoly.empty()) {
    ScalarScope bare;
    bare.allowed = std::set<std::string>{"gamma"};
    SymbolId gs = intern_symbol("gamma");
    scope.ctx = make_constraints({{gs, parse_poly(def.gamma_minpoly, bare)}});
  }
  std::map<std::string, Scalar> values;
  for (auto& [k, text] : params) values.emplace(k, parse_scalar(text, scope));
  return values;
}

}  // namespace

Presentation family_from_strings(const std::string& id, const std::map<std::string, std::string>& params) {
  return family(id, parse_params(find_family(id), params));
}

NcPoly family_element(const std::string& id, std::string_view text, const std::map<std::string, std::string>& params) {
  const FamilyDef& def = find_family(id);
  auto values = parse_params(def, params);
  Presentation sym = family(id);
  NcPoly f = sym.parse(text);
  if (auto g = values.find("gamma"); g != values.end()) {
    SymbolId gs = intern_symbol("gamma");
    Scalar gv = g->second.with_context(sym.ctx);
    f = f.map_coefficients([&](const Scalar& c) { return c.substitute({{gs, gv}}, sym.ctx); });
    values.erase(g);
  }
  return substitute(f, sym, values);
}

Presentation relation_template(const std::string& id) {
  if (id == "TL")
    return make_presentation("TL",
                             {kTemplateR1, kTemplateR2, kTemplateR3,
                              "x3*x1^2 - (f*x1^2 + g*x1*x2 + h*x2^2)*x3 - (j*x1 + k*x2)*x3*x1", kTemplateR5},
                             kTemplateSymbols, {}, {"p"});
  if (id == "TK")
    return make_presentation("TK",
                             {kTemplateR1, kTemplateR2, kTemplateR3,
                              "x2*x3*x1 - (f*x1^2 + g*x1*x2 + h*x2^2)*x3 - j*x1*x3*x1", kTemplateR5},
                             without(kTemplateSymbols, {"k"}), {}, {"p"});
  if (id == "TH")
    return make_presentation(
        "TH", {kTemplateR1, kTemplateR2, kTemplateR3, "x2^2*x3 - (f*x1^2 + g*x1*x2)*x3 - j*x1*x3*x1", kTemplateR5},
        without(kTemplateSymbols, {"h", "k"}), {}, {"p"});
  if (id == "THzero")
    return make_presentation(
        "THzero", {kTemplateR1, kTemplateR2, kTemplateR3, "(f*x1^2 + g*x1*x2)*x3 + j*x1*x3*x1", kTemplateR5},
        without(kTemplateSymbols, {"h", "k"}), {}, {"p"});
  if (id == "TJ") {
    Presentation p = substitute(relation_template("TL"), {{"p", Scalar(1L)}, {"m", Scalar(1L)}, {"a", Scalar(0L)}});
    p.name = "TJ";
    return p;
  }
  if (id == "S32") {
    Presentation p = substitute(relation_template("TL"), {{"p", Scalar(1L)},
                                                          {"m", Scalar(0L)},
                                                          {"a", Scalar(0L)},
                                                          {"b", Scalar(0L)},
                                                          {"n", Scalar(1L)}});
    p.name = "S32";
    return p;
  }
  throw InputError("unknown template '" + id + "'");
}

Presentation graded_twist(const Presentation& pres, const std::vector<Scalar>& weights) {
  if (weights.size() != pres.alphabet.size()) throw InputError("graded_twist needs one weight per generator");
  for (auto& w : weights)
    if (w.is_zero()) throw InputError("graded_twist weights must be nonzero");
  Presentation out = pres;
  for (auto& rel : out.relations) {
    std::vector<NcPoly::Term> terms;
    for (auto& [word, c] : rel.terms()) {
      Scalar f = c;
      int prefix = 0;
      for (std::size_t j = 0; j < word.size(); ++j) {
        if (prefix) f *= weights[word.at(j)].pow(-prefix);
        prefix += pres.alphabet[word.at(j)].degree();
      }
      terms.emplace_back(word, f);
    }
    rel = NcPoly::from_terms(std::move(terms));
  }
  for (auto& w : weights) {
    if (!w.is_rational()) out.nonvanishing.push_back(w.numerator().monic());
    for (SymbolId s : w.symbols())
      if ((!out.ctx || !out.ctx->constrains(s)) &&
          std::find(out.parameters.begin(), out.parameters.end(), symbol_name(s)) == out.parameters.end())
        out.parameters.push_back(symbol_name(s));
  }
  out.name = "twist(" + pres.name + ")";
  return out;
}

Presentation ore_extension(const Presentation& base, const LinearMap& sigma, const std::vector<NcPoly>& delta,
                           const Generator& new_gen) {
  std::size_t n = base.alphabet.size();
  if (sigma.size() != n || delta.size() != n) throw InputError("ore_extension needs sigma and delta on every generator");
  if (sigma.determinant().is_zero()) throw InputError("ore_extension needs an invertible sigma");
  if (base.alphabet.index_of(new_gen.name) >= 0) throw InputError("generator '" + new_gen.name + "' already exists");
  std::vector<Generator> gens = base.alphabet.generators();
  gens.push_back(new_gen);
  Presentation out = base;
  out.alphabet = Alphabet(gens);
  out.name = base.name + "[" + new_gen.name + "]";
  out.labels.clear();
  for (std::size_t i = 0; i < base.relations.size(); ++i) out.labels.push_back(base.label(i));
  Word t = out.alphabet.letter(n);
  auto images = sigma.images(base.alphabet);
  for (std::size_t g = 0; g < n; ++g) {
    Bidegree want{base.alphabet[g].bidegree.first + new_gen.bidegree.first,
                  base.alphabet[g].bidegree.second + new_gen.bidegree.second};
    if (!delta[g].is_zero() && delta[g].bidegree(base.alphabet) != want)
      throw InputError("delta(" + base.alphabet[g].name + ") has the wrong bidegree");
    // Base words keep their letters, so base polynomials embed unchanged.
    NcPoly rel = NcPoly(t) * NcPoly(base.alphabet.letter(g)) - images[g] * NcPoly(t) - delta[g];
    out.relations.push_back(rel);
    out.labels.push_back("o" + std::to_string(g + 1));
  }
  out.validate();
  return out;
}

Degree1NormalResult degree1_normal_search(const Presentation& pres, const BuchbergerOptions& options) {
  if (!pres.is_numeric()) throw InputError("degree1_normal_search needs numeric coefficients");
  const Alphabet& al = pres.alphabet;
  std::vector<std::size_t> deg1;
  for (std::size_t i = 0; i < al.size(); ++i)
    if (al[i].degree() == 1) deg1.push_back(i);
  std::size_t n = deg1.size();
  auto done = complete(pres, 3);
  Reducer red(done.system);
  const ConstraintsPtr& ctx = pres.ctx;

  std::vector<SymbolId> mult;
  std::vector<std::vector<Scalar>> L(n), R(n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t j = 0; j < n; ++j) {
      SymbolId l = fresh_symbol("L"), r = fresh_symbol("R");
      mult.push_back(l);
      mult.push_back(r);
      L[g].push_back(Scalar::symbol(l, ctx));
      R[g].push_back(Scalar::symbol(r, ctx));
    }
  std::vector<SymbolId> coord;
  for (std::size_t i = 0; i < n; ++i) coord.push_back(fresh_symbol("z"));

  Degree1NormalResult out;
  bool unknown = false;
  // Chart k: coordinate k is 1, earlier coordinates vanish, later ones are unknown.
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Scalar> cz(n);
    std::vector<SymbolId> free_coords;
    for (std::size_t i = 0; i < n; ++i) {
      if (i < k) cz[i] = Scalar(0L);
      else if (i == k) cz[i] = Scalar(1L);
      else {
        cz[i] = Scalar::symbol(coord[i], ctx);
        free_coords.push_back(coord[i]);
      }
    }
    NcPoly z;
    for (std::size_t i = 0; i < n; ++i) z += NcPoly(al.letter(deg1[i]), cz[i]);
    std::vector<NcPoly> zx, xz;
    for (std::size_t j = 0; j < n; ++j) {
      NcPoly x(al.letter(deg1[j]));
      zx.push_back(red.reduce(z * x));
      xz.push_back(red.reduce(x * z));
    }
    std::vector<ParamPoly> eqs;
    for (std::size_t g = 0; g < n; ++g) {
      NcPoly left = xz[g], right = zx[g];
      for (std::size_t j = 0; j < n; ++j) {
        left -= zx[j].scaled(L[g][j]);
        right -= xz[j].scaled(R[g][j]);
      }
      for (auto* e : {&left, &right})
        for (auto& [w, c] : e->terms()) eqs.push_back(c.numerator());
    }
    std::vector<SymbolId> order = mult;
    order.insert(order.end(), free_coords.begin(), free_coords.end());
    if (ctx)
      for (auto& c : ctx->constraints()) {
        eqs.push_back(c.minimal_polynomial);
        order.push_back(c.symbol);
      }
    std::string chart = "chart " + al[deg1[k]].name + " = 1";
    if (eqs.empty()) eqs.push_back(ParamPoly(0L));
    GroebnerBasis gb;
    try {
      gb = buchberger(eqs, order, options);
    } catch (const BudgetExceeded&) {
      unknown = true;
      out.diagnostics += chart + ": Groebner budget exceeded; ";
      continue;
    }
    if (gb.is_unit()) {
      out.diagnostics += chart + ": inconsistent; ";
      continue;
    }
    bool isolated = true;
    std::map<SymbolId, Scalar> values;
    for (SymbolId u : free_coords) {
      ParamPoly nf = gb.normal_form(ParamPoly::variable(u));
      bool only_constants = true;
      for (SymbolId s : nf.symbols()) only_constants = only_constants && ctx && ctx->constrains(s);
      if (!only_constants) {
        isolated = false;
        break;
      }
      values.emplace(u, Scalar(nf, ctx));
    }
    if (isolated) {
      out.elements.push_back(z.map_coefficients([&](const Scalar& c) { return c.substitute(values, ctx); }));
      out.diagnostics += chart + ": one solution; ";
    } else {
      std::string desc = chart + ":";
      for (auto& b : gb.basis()) {
        bool mentions_coord = false;
        for (SymbolId s : b.symbols())
          mentions_coord = mentions_coord || std::find(free_coords.begin(), free_coords.end(), s) != free_coords.end();
        if (mentions_coord) desc += " " + b.to_string() + " = 0;";
      }
      if (desc.back() == ':') desc += " coordinates free";
      out.families.push_back(desc);
      auto at_origin = eqs;
      for (SymbolId u : free_coords) at_origin.push_back(ParamPoly::variable(u));
      try {
        if (!buchberger(at_origin, order, options).is_unit()) {
          std::map<SymbolId, Scalar> zero;
          for (SymbolId u : free_coords) zero.emplace(u, Scalar(0L));
          out.elements.push_back(z.map_coefficients([&](const Scalar& c) { return c.substitute(zero, ctx); }));
        }
      } catch (const BudgetExceeded&) {
        out.diagnostics += chart + ": representative not certified; ";
      }
      out.diagnostics += chart + ": solutions not isolated; ";
    }
  }
  if (!out.elements.empty() || !out.families.empty()) out.verdict = Degree1NormalResult::Verdict::Found;
  else out.verdict = unknown ? Degree1NormalResult::Verdict::Unknown : Degree1NormalResult::Verdict::None;
  return out;
}

std::vector<NormalClaim> normal_claims() {
  return {
      {"3.5.4", "A", {}, "x3*x1 - q^2*b*x1*x3"},
      {"3.6.4", "B", {}, "x3*x1 - b^2*x2*x3"},
      {"3.7.4", "C", {}, "x3*x1 - b*x1*x3"},
      {"3.13.3", "H", {{"b", "1"}}, "x3*x1 - x1*x3"},
  };
}

std::vector<ChainClaim> chain_claims() {
  return {
      {"3.8",
       "D",
       {{"b", "1"}},
       {{{"x1^2 + x2^2", "x3^2"}, true}, {{"x1^2"}, false}, {{"x3*x1 - x1*x3"}, false}},
       8,
       8},
      {"3.9", "E", {{"b", "1"}}, {{{"x1*x2", "x3^2", "x1^2 + x2^2"}, false}, {{"x3*x1 - x2*x3"}, false}}, 8, {}},
      {"3.10",
       "F",
       {{"b", "1"}},
       {{{"x1^3 + x2^3", "x3^3", "x1^2*x2"}, false},
        {{"(x3*x1)^3 + x1*(x3*x1)^2*x3 - gamma^2*x2*(x3*x1)^2*x3 - x1^2*(x3*x1)*x3^2 - x1*x2*(x3*x1)*x3^2"}, false}},
       16,
       81},
      {"3.12",
       "G",
       {{"b", "1"}},
       {{{"x3^2", "x1^2 + x2^2"}, false}, {{"x1^2"}, false}, {{"x3*x1 - x1*x3", "x3*x2 - x2*x3"}, false}},
       8,
       {}},
  };
}

std::vector<ResolutionData> resolution_data() {
  return {
      {"D",
       {{"b", "1"}},
       {{"x3^2", "-x1*x3", "-x2", "x3"}, {"0", "0", "-x1", "x3"}, {"-x3*x1", "(h - 1)*x1^2 + h*x2^2", "0", "-x1 - x2"}},
       {{"-x2", "-x1", "0"},
        {"-x3", "-x3", "x1 + x2"},
        {"-x3^2", "0", "x1*x3"},
        {"-x3*x1", "0", "(h - 1)*x1^2 + h*x2^2"}}},
      {"E",
       {{"b", "1"}},
       {{"-x3^2", "x2*x3", "-x2", "-x3"}, {"0", "0", "-x1", "-x3"}, {"x1*x3 + x2*x3 - x3*x1", "gamma*x1*x2", "0", "x1 + x2"}},
       {{"-x2", "-x1", "0"},
        {"-x3", "-x3", "x1 + x2"},
        {"-x3^2", "0", "x2*x3"},
        {"-x3*x1 + x1*x3 + x2*x3", "0", "gamma*x1*x2"}}},
      {"F",
       {{"b", "1"}},
       {{"gamma^2*x3^2", "-gamma*x3*x1 + x2*x3", "-gamma*x2", "x3"},
        {"0", "0", "gamma^2*x1", "x3"},
        {"-gamma^2*x2*x3 + x3*x1", "x1*x2", "0", "-gamma*x1 - x2"}},
       {{"-x2", "gamma^2*x1", "0"},
        {"-gamma*x3", "-x3", "x1 + x2"},
        {"-x3^2", "0", "gamma^2*x2*x3 - x3*x1"},
        {"gamma^2*x2*x3 - x3*x1", "0", "gamma*x1*x2"}}},
      // gamma-bar = 1 - gamma for the roots of gamma^2 - gamma + 1/2.
      {"G",
       {{"b", "1"}},
       {{"0", "0", "-x2", "x3"}, {"x3^2", "-x2*x3", "-x1", "x3"}, {"-x3*x1", "(1 - gamma)*x1^2 + gamma*x2^2", "0", "-x1 - x2"}},
       {{"-x2", "-x1", "0"},
        {"-x3", "-x3", "x1 + x2"},
        {"-x3^2", "0", "x2*x3"},
        {"-x3*x1", "0", "(1 - gamma)*x1^2 + gamma*x2^2"}}},
  };
}

}  // namespace ncalg
