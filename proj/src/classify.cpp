#include "ncalg/classify.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "ncalg/catalog.hpp"
#include "ncalg/errors.hpp"
#include "ncalg/symbols.hpp"

namespace ncalg {

std::vector<ParamPoly> CoefficientSystem::polynomials() const {
  std::vector<ParamPoly> out;
  for (auto& e : entries) out.push_back(e.poly);
  return out;
}

const SystemEntry* CoefficientSystem::find(const std::string& rel, const Word& monomial) const {
  for (auto& e : entries)
    if (e.relation == rel && e.monomial == monomial) return &e;
  return nullptr;
}

std::vector<const SystemEntry*> CoefficientSystem::relation(const std::string& rel) const {
  std::vector<const SystemEntry*> out;
  for (auto& e : entries)
    if (e.relation == rel) out.push_back(&e);
  return out;
}

namespace {

struct OverlapSpec {
  std::string name;
  std::string witness;
  std::string rule_a, rule_b;
  /// The resolved relation becomes a new rule instead of system entries.
  bool adds_rule = false;
};

std::vector<OverlapSpec> overlap_specs(const std::string& id) {
  if (id == "TL" || id == "TJ" || id == "S32")
    return {{"r6", "x3^2*x1*x2", "r3", "r5"}, {"r7", "x3^2*x1^2", "r3", "r4"}, {"r8", "x3*x1*x2*x1", "r5", "r1"}};
  if (id == "TK")
    return {{"r6", "x3^2*x1*x2", "r3", "r5"},
            {"r7", "x3*x2*x3*x1", "r2", "r4"},
            {"r8", "x3*x1*x2*x1", "r5", "r1", true},
            {"r9", "x2*x3*x1*x2", "r4", "r5"}};
  if (id == "TH") return {{"r6", "x3*x2^2*x3", "r2", "r4"}};
  if (id == "THzero") return {};
  throw InputError("unknown case '" + id + "'");
}

std::size_t rule_index(const RewriteSystem& sys, const std::string& label) {
  for (std::size_t i = 0; i < sys.rules.size(); ++i)
    if (sys.rules[i].label == label) return i;
  throw InputError("no rule labelled " + label);
}

}  // namespace

CoefficientSystem overlap_system(const std::string& case_id) {
  CoefficientSystem cs;
  cs.case_id = case_id;
  cs.tmpl = relation_template(case_id);
  cs.nonvanishing = cs.tmpl.nonvanishing;
  cs.ties = {"q = 1/p", "z = (a - m)/p"};
  RewriteSystem sys = cs.tmpl.system();
  for (auto& spec : overlap_specs(case_id)) {
    Word w = cs.tmpl.parse(spec.witness).leading_word();
    std::size_t ra = rule_index(sys, spec.rule_a), rb = rule_index(sys, spec.rule_b);
    auto ambs = find_ambiguities(sys, w.degree, w.degree);
    auto it = std::find_if(ambs.begin(), ambs.end(), [&](const Ambiguity& a) {
      return a.witness == w && ((a.rule_left == ra && a.rule_right == rb) || (a.rule_left == rb && a.rule_right == ra));
    });
    if (it == ambs.end()) throw InputError("case " + case_id + " has no ambiguity " + spec.witness);
    NcPoly res = resolve_ambiguity(*it, sys);
    if (spec.adds_rule) {
      if (res.is_zero()) throw InputError("overlap " + spec.witness + " resolves; no new rule");
      cs.new_relations.push_back(res);
      sys.rules.push_back(make_rule(res, sys.alphabet, spec.name));
      sys.add_side_conditions(sys.rules.back().side_conditions);
      continue;
    }
    for (auto& [word, c] : res.terms()) cs.entries.push_back({spec.name, word, c, c.numerator()});
  }
  for (auto& c : sys.side_conditions)
    if (std::find(cs.nonvanishing.begin(), cs.nonvanishing.end(), c) == cs.nonvanishing.end())
      cs.nonvanishing.push_back(c);
  return cs;
}

DisplayedReport verify_displayed(const std::string& case_id, const std::string& data_dir) {
  DisplayedReport rep;
  CoefficientSystem cs = overlap_system(case_id);
  const Presentation& t = cs.tmpl;
  ScalarScope scope = t.scope();
  scope.allowed->insert("q");
  scope.allowed->insert("z");
  std::map<SymbolId, Scalar> ties = {{intern_symbol("q"), parse_scalar("1/p", t.scope())},
                                     {intern_symbol("z"), parse_scalar("(a - m)/p", t.scope())}};
  std::set<std::pair<std::string, std::string>> seen;
  rep.pass = true;
  for (auto& spec : overlap_specs(case_id)) {
    if (spec.adds_rule) continue;
    std::string path = data_dir + "/golden/" + case_id + "_" + spec.name + ".txt";
    std::ifstream in(path);
    if (!in) throw InputError("missing golden file " + path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      auto colon = line.find(':');
      if (colon == std::string::npos) throw InputError("malformed golden line in " + path + ": " + line);
      GoldenLine g;
      g.relation = spec.name;
      g.monomial = t.parse(line.substr(0, colon)).leading_word();
      g.expected_text = line.substr(colon + 1);
      Scalar want = parse_scalar(g.expected_text, scope).substitute(ties);
      const SystemEntry* e = cs.find(spec.name, g.monomial);
      Scalar got = e ? e->value : Scalar(0L);
      g.computed = got.to_string();
      auto sg = rep.sign.find(spec.name);
      if (sg == rep.sign.end() && !got.is_zero()) {
        int s = want == got ? 1 : want == -got ? -1 : 0;
        if (s != 0) sg = rep.sign.emplace(spec.name, s).first;
      }
      long s = sg == rep.sign.end() ? 1 : sg->second;
      g.match = want == got * Scalar(s);
      rep.pass = rep.pass && g.match;
      seen.insert({spec.name, g.monomial.letters});
      rep.lines.push_back(std::move(g));
    }
  }
  for (auto& e : cs.entries)
    if (!seen.count({e.relation, e.monomial.letters})) {
      rep.extra.push_back(e.relation + " " + t.alphabet.to_string(e.monomial) + ": " + e.value.to_string());
      rep.pass = false;
    }
  return rep;
}

FamilySolveReport family_solves(const Presentation& fam, const CoefficientSystem& cs) {
  FamilySolveReport rep;
  const Presentation& t = cs.tmpl;
  if (fam.relations.size() < 4) {
    rep.message = "family has fewer than four relations";
    return rep;
  }
  std::set<SymbolId> tsyms;
  for (auto& s : t.parameter_ids()) tsyms.insert(s);
  std::map<SymbolId, Scalar> values;
  for (std::size_t i = 0; i < 4; ++i) {
    RewriteRule tr = make_rule(t.relations[i], t.alphabet);
    RewriteRule fr = make_rule(fam.relations[i], fam.alphabet);
    if (tr.lead != fr.lead) {
      rep.message = "relation " + t.label(i) + " has lead " + t.alphabet.to_string(tr.lead) + " in the template but " +
                    fam.alphabet.to_string(fr.lead) + " in the family";
      return rep;
    }
    std::set<std::string> words;
    for (auto& [w, c] : tr.tail.terms()) words.insert(w.letters);
    for (auto& [w, c] : fr.tail.terms()) {
      if (!words.count(w.letters)) {
        rep.message = "family word " + fam.alphabet.to_string(w) + " in " + t.label(i) + " has no template coefficient";
        return rep;
      }
    }
    for (auto& [w, tc] : tr.tail.terms()) {
      Scalar fc = fr.tail.coefficient(w);
      auto syms = tc.symbols();
      if (syms.empty()) {
        if (!(tc.with_context(fam.ctx) == fc)) {
          rep.message = "fixed coefficient of " + t.alphabet.to_string(w) + " in " + t.label(i) + " differs";
          return rep;
        }
        continue;
      }
      // Coefficients of r1-r4 are k * s for one template symbol s.
      if (syms.size() != 1 || !tc.denominator().is_constant() || !tc.numerator().is_monomial() ||
          tc.numerator().total_degree() != 1) {
        rep.message = "template coefficient " + tc.to_string() + " is not a scaled symbol";
        return rep;
      }
      SymbolId s = syms[0];
      Scalar k = tc / Scalar::symbol(s);
      values[s] = fc / k.with_context(fam.ctx);
    }
  }
  for (SymbolId s : tsyms)
    if (!values.count(s)) {
      rep.message = "template symbol " + symbol_name(s) + " was not assigned";
      return rep;
    }
  for (auto& [s, v] : values) rep.assignment.emplace(symbol_name(s), v);
  for (auto& e : cs.entries) {
    Scalar v;
    try {
      v = e.value.substitute(values, fam.ctx);
    } catch (const PoleError&) {
      rep.nonzero.push_back(e.relation + " " + t.alphabet.to_string(e.monomial) + ": pole");
      continue;
    }
    if (!v.is_zero()) rep.nonzero.push_back(e.relation + " " + t.alphabet.to_string(e.monomial) + ": " + v.to_string());
  }
  rep.pass = rep.nonzero.empty();
  rep.message = rep.pass ? "all " + std::to_string(cs.entries.size()) + " coefficients vanish"
                         : std::to_string(rep.nonzero.size()) + " coefficients do not vanish";
  return rep;
}

FamilySolveReport family_solves(const Presentation& fam, const std::string& case_id) {
  return family_solves(fam, overlap_system(case_id));
}

namespace {

std::map<SymbolId, Scalar> symbol_map(const std::map<std::string, Scalar>& m) {
  std::map<SymbolId, Scalar> out;
  for (auto& [k, v] : m) out.emplace(intern_symbol(k), v);
  return out;
}

struct Specialized {
  std::vector<ParamPoly> polys;
  std::vector<ParamPoly> nonvanishing;
  std::string witness;
};

Specialized specialize(const CoefficientSystem& cs, const std::map<std::string, Scalar>& reductions,
                       const std::vector<std::string>& extra) {
  Specialized s;
  auto vals = symbol_map(reductions);
  const Alphabet& al = cs.tmpl.alphabet;
  for (auto& e : cs.entries) {
    Scalar v = e.value.substitute(vals);
    if (v.is_rational() && !v.is_zero() && s.witness.empty())
      s.witness = e.relation + " " + al.to_string(e.monomial) + " = " + v.to_string();
    if (!v.is_zero()) s.polys.push_back(v.numerator());
  }
  std::vector<ParamPoly> nv = cs.nonvanishing;
  for (auto& x : extra) nv.push_back(parse_poly(x, cs.tmpl.scope()));
  for (auto& p : nv) {
    Scalar v = substitute_poly(p, vals, nullptr);
    if (v.is_zero()) throw InputError("reductions violate the condition " + p.to_string() + " != 0");
    if (!v.is_rational()) s.nonvanishing.push_back(v.numerator());
  }
  return s;
}

}  // namespace

NoSolutionReport no_solution_certificate(const CoefficientSystem& cs, const std::map<std::string, Scalar>& reductions,
                                         const std::vector<std::string>& extra, const BuchbergerOptions& options) {
  NoSolutionReport rep;
  Specialized s = specialize(cs, reductions, extra);
  if (!s.witness.empty()) {
    rep.verdict = InconsistencyResult::Verdict::Inconsistent;
    rep.witness = s.witness;
    rep.diagnostics = "a coefficient is a nonzero constant";
    return rep;
  }
  auto r = inconsistency_certificate(s.polys, s.nonvanishing, options);
  rep.verdict = r.verdict;
  rep.diagnostics = r.diagnostics;
  return rep;
}

std::vector<ParamPoly> solve_system(const CoefficientSystem& cs, const std::map<std::string, Scalar>& reductions,
                                    const std::vector<std::string>& extra, const BuchbergerOptions& options) {
  Specialized s = specialize(cs, reductions, extra);
  auto r = inconsistency_certificate(s.polys, s.nonvanishing, options);
  if (r.basis.empty() && r.verdict == InconsistencyResult::Verdict::Unknown &&
      r.diagnostics.find("proper") == std::string::npos)
    throw BudgetExceeded(r.diagnostics);
  return r.basis;
}

StructuralCertificate structural_certificate(const std::string& case_id) {
  StructuralCertificate cert;
  if (case_id != "TH" && case_id != "THzero") throw InputError("no structural certificate for case " + case_id);
  Presentation t = relation_template(case_id);
  const Alphabet& al = t.alphabet;
  NcPoly r4 = t.relations[3];
  if (case_id == "TH") {
    CoefficientSystem cs = overlap_system("TH");
    Word w = t.parse("x3*x1*x3*x1").leading_word();
    const SystemEntry* e = cs.find("r6", w);
    SymbolId j = intern_symbol("j");
    Scalar jv = Scalar::symbol(j);
    if (!e) {
      cert.message = "r6 has no x3*x1*x3*x1 term";
      return cert;
    }
    Scalar ratio = e->value / jv;
    if (!ratio.is_rational() || ratio.is_zero()) {
      cert.message = "x3*x1*x3*x1 coefficient of r6 is " + e->value.to_string() + ", not a multiple of j";
      return cert;
    }
    cert.forcing = "x3*x1*x3*x1 coefficient of r6 is " + e->value.to_string() + ", so j = 0";
    r4 = r4.map_coefficients([&](const Scalar& c) { return c.substitute({{j, Scalar(0L)}}); });
  }
  // Split off a common first (left) or last (right) letter.
  auto common = [&](bool left) -> std::optional<std::uint8_t> {
    std::optional<std::uint8_t> letter;
    for (auto& [w, c] : r4.terms()) {
      std::uint8_t l = left ? w.at(0) : w.at(w.size() - 1);
      if (letter && *letter != l) return std::nullopt;
      letter = l;
    }
    return letter;
  };
  bool left = case_id == "THzero";
  auto letter = common(left);
  if (!letter) {
    cert.message = "r4 has no common " + std::string(left ? "left" : "right") + " factor";
    return cert;
  }
  std::vector<NcPoly::Term> terms;
  for (auto& [w, c] : r4.terms())
    terms.emplace_back(left ? al.sub(w, 1, w.size() - 1) : al.sub(w, 0, w.size() - 1), c);
  cert.factor = NcPoly::from_terms(std::move(terms));
  cert.side = left ? "left" : "right";
  // The cofactor is nonzero in A if it survives reduction by the other relations.
  Presentation rest = t;
  rest.relations.erase(rest.relations.begin() + 3);
  rest.labels.clear();
  for (std::size_t i = 0; i < t.relations.size(); ++i)
    if (i != 3) rest.labels.push_back(t.label(i));
  auto done = complete(rest, cert.factor.degree());
  NcPoly nf = reduce(cert.factor, done.system);
  if (nf.is_zero()) {
    cert.message = "the cofactor " + cert.factor.to_string(al) + " vanishes in A";
    return cert;
  }
  std::string x = al[*letter].name;
  cert.pass = true;
  cert.message = "r4 = " + std::string(left ? x + " * (" + cert.factor.to_string(al) + ")"
                                            : "(" + cert.factor.to_string(al) + ") * " + x) +
                 " with the cofactor nonzero modulo the other relations (normal form " + nf.to_string(al) +
                 "), so A has zero divisors";
  return cert;
}

}  // namespace ncalg
