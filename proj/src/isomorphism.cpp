#include "ncalg/isomorphism.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <set>

#include "json.hpp"

#include "ncalg/catalog.hpp"
#include "ncalg/errors.hpp"
#include "ncalg/symbols.hpp"

namespace ncalg {

namespace {

int image_degree(const NcPoly& rel, const std::vector<NcPoly>& images) {
  int best = 0;
  for (auto& [w, c] : rel.terms()) {
    int d = 0;
    for (std::size_t i = 0; i < w.size(); ++i) d += images.at(w.at(i)).degree();
    best = std::max(best, d);
  }
  return best;
}

}  // namespace

HomomorphismCheck verify_homomorphism(const Presentation& source, const Presentation& target,
                                      const std::vector<NcPoly>& images, const CompletionOptions& options) {
  if (images.size() != source.alphabet.size()) throw InputError("need one image per source generator");
  int degree = 1;
  for (auto& rel : source.relations) degree = std::max(degree, image_degree(rel, images));
  auto done = complete(target, degree, options);
  Reducer red(done.system);
  HomomorphismCheck out;
  for (std::size_t i = 0; i < source.relations.size(); ++i) {
    NcPoly nf = red.reduce(apply_homomorphism(source.relations[i], images));
    if (!nf.is_zero()) out.failures.push_back(source.label(i) + ": " + nf.to_string(target.alphabet));
  }
  out.pass = out.failures.empty();
  return out;
}

MorphismReport verify_morphism(const MorphismClaim& claim, const CompletionOptions& options) {
  MorphismReport rep;
  rep.tag = claim.tag;
  const Alphabet& al = claim.target.alphabet;
  if (claim.map.size() != claim.source.alphabet.size() || claim.map.size() != al.size())
    throw InputError("claim " + claim.tag + ": map size does not match the generators");
  rep.preserves_bigrading = claim.map.preserves_bigrading(al);
  if (claim.twist_base) {
    auto diag = LinearMap::diagonal(claim.twist_weights);
    rep.twist_automorphism = verify_homomorphism(*claim.twist_base, *claim.twist_base, diag.images(al), options);
  }
  rep.determinant = claim.map.determinant();
  if (rep.determinant.is_zero()) {
    rep.message = "singular map";
    return rep;
  }
  rep.forward = verify_homomorphism(claim.source, claim.target, claim.map.images(al), options);
  rep.inverse = verify_homomorphism(claim.target, claim.source, claim.map.inverse().images(claim.source.alphabet), options);
  bool twist_ok = !rep.twist_automorphism || rep.twist_automorphism->pass;
  rep.pass = rep.forward.pass && rep.inverse.pass && twist_ok && rep.preserves_bigrading;
  if (rep.pass) {
    rep.message = "relations map into the target ideal both ways; det = " + rep.determinant.to_string();
  } else {
    std::string why;
    if (!rep.preserves_bigrading) why += " map mixes bidegrees;";
    if (!twist_ok) why += " twist weights are not an automorphism of the base;";
    if (!rep.forward.pass) why += " forward: " + rep.forward.failures.front() + ";";
    if (!rep.inverse.pass) why += " inverse: " + rep.inverse.failures.front() + ";";
    why.pop_back();
    rep.message = why.substr(1);
  }
  return rep;
}

namespace {

using nlohmann::json;

std::map<std::string, std::string> string_map(const json& j) {
  std::map<std::string, std::string> out;
  if (j.is_null()) return out;
  for (auto& [k, v] : j.items()) out.emplace(k, v.get<std::string>());
  return out;
}

Presentation algebra_spec(const json& j) {
  Presentation p = family_from_strings(j.at("family").get<std::string>(), string_map(j.value("params", json())));
  if (j.value("opposite", false)) p = opposite(p);
  return p;
}

ScalarScope union_scope(const Presentation& a, const Presentation& b) {
  ScalarScope s;
  s.allowed = std::set<std::string>();
  for (auto* p : {&a, &b}) {
    for (auto& n : p->parameters) s.allowed->insert(n);
    for (auto& c : p->constraints) s.allowed->insert(symbol_name(c.symbol));
  }
  s.ctx = merge_contexts(a.ctx, b.ctx);
  return s;
}

LinearMap parse_linear_map(const json& rows, const Alphabet& al, const ScalarScope& scope, const std::string& tag) {
  if (!rows.is_array() || rows.size() != al.size()) throw InputError("claim " + tag + ": map needs one image per generator");
  LinearMap m;
  for (auto& r : rows) {
    NcPoly img = parse_ncpoly(r.get<std::string>(), al, scope);
    std::vector<Scalar> row(al.size(), Scalar(0L));
    for (auto& [w, c] : img.terms()) {
      if (w.size() != 1) throw InputError("claim " + tag + ": image " + r.get<std::string>() + " is not linear");
      row[w.at(0)] = c;
    }
    m.matrix.push_back(std::move(row));
  }
  return m;
}

}  // namespace

std::vector<MorphismClaim> load_claims(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open claims file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), e.byte);
  }
  if (doc.value("format", 0) != 1) throw InputError(path + ": unsupported claims format");
  std::vector<MorphismClaim> out;
  for (auto& c : doc.at("claims")) {
    MorphismClaim claim;
    claim.tag = c.at("tag").get<std::string>();
    claim.kind = c.at("kind").get<std::string>();
    claim.description = c.value("description", "");
    claim.target = algebra_spec(c.at("target"));
    if (claim.kind == "twist") {
      claim.twist_base = algebra_spec(c.at("base"));
      ScalarScope scope = union_scope(*claim.twist_base, claim.target);
      for (auto& w : c.at("weights")) claim.twist_weights.push_back(parse_scalar(w.get<std::string>(), scope));
      claim.source = graded_twist(*claim.twist_base, claim.twist_weights);
    } else {
      claim.source = algebra_spec(c.at("source"));
    }
    claim.map = parse_linear_map(c.at("map"), claim.target.alphabet, union_scope(claim.source, claim.target), claim.tag);
    out.push_back(std::move(claim));
  }
  return out;
}

std::vector<MorphismClaim> catalog_claims() { return load_claims(std::string(NCALG_DATA_DIR) + "/claims.json"); }

std::vector<MorphismReport> verify_catalog_isomorphisms(const CompletionOptions& options) {
  auto claims = catalog_claims();
  std::vector<MorphismReport> out(claims.size());
  unsigned jobs = std::max(1u, options.jobs);
  CompletionOptions inner = options;
  inner.jobs = 1;
  for (std::size_t start = 0; start < claims.size(); start += jobs) {
    std::vector<std::future<MorphismReport>> batch;
    for (std::size_t i = start; i < std::min(claims.size(), start + jobs); ++i)
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                 [&, i] { return verify_morphism(claims[i], inner); }));
    for (std::size_t k = 0; k < batch.size(); ++k) out[start + k] = batch[k].get();
  }
  return out;
}

InverseMapsReport verify_inverse_maps(const Presentation& p, const Presentation& q, const std::vector<NcPoly>& phi,
                                      const std::vector<NcPoly>& psi, const CompletionOptions& options) {
  InverseMapsReport rep;
  rep.forward = verify_homomorphism(p, q, phi, options);
  rep.backward = verify_homomorphism(q, p, psi, options);
  auto composite = [&](const Presentation& a, const std::vector<NcPoly>& there, const std::vector<NcPoly>& back) {
    int degree = 1;
    std::vector<NcPoly> round;
    for (auto& img : there) {
      round.push_back(apply_homomorphism(img, back));
      degree = std::max(degree, round.back().degree());
    }
    auto done = complete(a, degree, options);
    for (std::size_t g = 0; g < round.size(); ++g) {
      NcPoly nf = reduce(round[g] - NcPoly(a.alphabet.letter(g)), done.system);
      if (!nf.is_zero()) rep.composite_failures.push_back(a.alphabet[g].name + " in " + a.name + ": " + nf.to_string(a.alphabet));
    }
  };
  composite(p, phi, psi);
  composite(q, psi, phi);
  rep.pass = rep.forward.pass && rep.backward.pass && rep.composite_failures.empty();
  return rep;
}

std::vector<OreClaim> ore_claims() {
  std::vector<OreClaim> out;
  {
    Alphabet base_al({{"x1", {1, 0}}, {"y", {1, 1}}, {"x3", {0, 1}}});
    Presentation base = make_presentation("B", base_al,
                                          {"y*x1 - q*b*x1*y", "x3*y - q*b*y*x3", "x3*x1 - q^2*b*x1*x3 - y"},
                                          {"b", "q"}, {}, {"b", "q", "q - 1"});
    NcPoly d3 = base.parse("1/(q^2*b^2)*x3*x1 - 1/b*x1*x3");
    NcPoly x1 = base.parse("x1");
    NcPoly dy = d3 * x1 - (x1 * d3).scaled(base.parse("q*b").leading_coefficient());
    ScalarScope sc = base.scope();
    LinearMap sigma = LinearMap::diagonal(
        {parse_scalar("1/q", sc), parse_scalar("1/(q*b)", sc), parse_scalar("1/b", sc)});
    OreClaim c;
    c.family = "A";
    c.ore = ore_extension(base, sigma, {NcPoly(), dy, d3}, {"x2", {1, 0}});
    c.target = family("A");
    c.phi = {c.target.parse("x1"), c.target.parse("x3*x1 - q^2*b*x1*x3"), c.target.parse("x3"), c.target.parse("x2")};
    c.psi = {c.ore.parse("x1"), c.ore.parse("x2"), c.ore.parse("x3")};
    out.push_back(std::move(c));
  }
  {
    Alphabet base_al({{"x1", {1, 0}}, {"x3", {0, 1}}});
    Presentation h = family("H");
    Presentation base = make_presentation(
        "B", base_al, {"x3^2*x1 + b^2*x1*x3^2 - 2*b*x3*x1*x3", "x3*x1^2 + b^2*x1^2*x3 - 2*b*x1*x3*x1"}, {"b"}, {},
        {"b"});
    LinearMap sigma = LinearMap::diagonal({Scalar(1L), parse_scalar("1/b", base.scope())});
    OreClaim c;
    c.family = "H";
    c.ore = ore_extension(base, sigma, {base.parse("x1^2"), base.parse("-2*x1*x3")}, {"x2", {1, 0}});
    c.target = h;
    c.phi = {h.parse("x1"), h.parse("x3"), h.parse("x2")};
    c.psi = {c.ore.parse("x1"), c.ore.parse("x2"), c.ore.parse("x3")};
    out.push_back(std::move(c));
  }
  return out;
}

std::string to_string(MapShape shape) {
  switch (shape) {
    case MapShape::Diagonal: return "diagonal";
    case MapShape::Trivial: return "trivial";
    case MapShape::QuasiTrivial: return "quasi-trivial";
    case MapShape::Bigraded: return "bigraded";
    case MapShape::General: return "general";
  }
  return "?";
}

MorphismSystem morphism_system(const Presentation& source, const Presentation& target, MapShape shape) {
  if (!source.is_numeric() || !target.is_numeric()) throw InputError("morphism search needs numeric coefficients");
  if (!(source.alphabet == target.alphabet) || source.alphabet.size() != 3)
    throw InputError("morphism search needs the same three generators on both sides");
  MorphismSystem ms;
  auto fresh = [&](const char* name) {
    SymbolId s = fresh_symbol(name);
    ms.unknowns.push_back(s);
    return Scalar::symbol(s);
  };
  Scalar z(0L);
  std::vector<std::vector<Scalar>> m(3, std::vector<Scalar>(3, z));
  switch (shape) {
    case MapShape::Diagonal:
      for (int i = 0; i < 3; ++i) m[i][i] = fresh("_d");
      break;
    case MapShape::Trivial: {
      Scalar l = fresh("_l"), mu = fresh("_m");
      m[0][0] = l, m[1][1] = l, m[2][2] = mu;
      break;
    }
    case MapShape::QuasiTrivial: {
      Scalar l = fresh("_l"), r = fresh("_r"), mu = fresh("_m");
      m[0][1] = l, m[1][0] = r, m[2][2] = mu;
      break;
    }
    case MapShape::Bigraded:
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = fresh("_a");
      m[2][2] = fresh("_m");
      break;
    case MapShape::General:
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = fresh("_a");
      break;
  }
  ms.map.matrix = m;
  ms.determinant = ms.map.determinant().numerator();
  int degree = 1;
  for (auto& r : source.relations) degree = std::max(degree, r.degree());
  auto done = complete(target, degree);
  Reducer red(done.system);
  auto images = ms.map.images(target.alphabet);
  for (auto& rel : source.relations) {
    NcPoly nf = red.reduce(apply_homomorphism(rel, images));
    for (auto& [w, c] : nf.terms()) ms.equations.push_back(c.numerator());
  }
  ConstraintsPtr ctx = merge_contexts(source.ctx, target.ctx);
  if (ctx)
    for (auto& c : ctx->constraints()) ms.equations.push_back(c.minimal_polynomial);
  return ms;
}

MorphismSearch search_morphisms(const Presentation& source, const Presentation& target, MapShape shape,
                                const BuchbergerOptions& options) {
  MorphismSearch out;
  out.system = morphism_system(source, target, shape);
  auto r = inconsistency_certificate(out.system.equations, {out.system.determinant}, options);
  out.diagnostics = r.diagnostics;
  if (r.inconsistent()) {
    out.verdict = MorphismSearch::Verdict::None;
  } else if (!r.basis.empty()) {
    out.verdict = MorphismSearch::Verdict::Exists;
    out.basis = r.basis;
  }
  return out;
}

GenericityReport genericity(const Presentation& pres) {
  GenericityReport g;
  if (pres.relations.size() < 2) throw InputError("genericity needs the relations r1 and r2");
  const Alphabet& al = pres.alphabet;
  auto coeff = [&](const RewriteRule& r, const char* word) { return r.tail.coefficient(pres.parse(word).leading_word()); };
  RewriteRule r1 = make_rule(pres.relations[0], al), r2 = make_rule(pres.relations[1], al);
  if (al.to_string(r1.lead) != "x2*x1" || al.to_string(r2.lead) != "x3*x2")
    throw InputError("r1 and r2 must have leading words x2*x1 and x3*x2");
  g.p = coeff(r1, "x1*x2");
  g.m = coeff(r1, "x1^2");
  g.a = coeff(r2, "x3*x1");
  g.b = coeff(r2, "x2*x3");
  g.jordan = !g.m.is_zero();
  auto bad = [](const Scalar& v, long x) { return v == Scalar(x); };
  std::vector<std::string> why;
  if (g.jordan) {
    if (bad(g.b, 0) || bad(g.b, 1)) why.push_back("beta = " + g.b.to_string() + " must avoid 0 and 1");
  } else {
    if (bad(g.p, 0) || bad(g.p, 1)) why.push_back("p = " + g.p.to_string() + " must avoid 0 and 1");
    if (bad(g.b, 0) || bad(g.b, 1)) why.push_back("b = " + g.b.to_string() + " must avoid 0 and 1");
    if (bad(g.a, 0) || bad(g.a, -1)) why.push_back("a = " + g.a.to_string() + " must avoid 0 and -1");
  }
  g.generic = why.empty();
  for (auto& w : why) g.message += (g.message.empty() ? "" : "; ") + w;
  if (g.generic) g.message = "generic";
  return g;
}

std::string to_string(AutSignature s) {
  switch (s) {
    case AutSignature::T: return "T";
    case AutSignature::TxZ2: return "TxZ2";
    case AutSignature::Unknown: return "UNKNOWN";
  }
  return "?";
}

SignatureReport autgroup_signature(const Presentation& pres, const BuchbergerOptions& options) {
  auto g = genericity(pres);
  if (!g.generic) throw InputError(pres.name + " is not generic: " + g.message);
  SignatureReport rep;
  rep.trivial = search_morphisms(pres, pres, MapShape::Trivial, options);
  rep.quasi_trivial = search_morphisms(pres, pres, MapShape::QuasiTrivial, options);
  using V = MorphismSearch::Verdict;
  if (rep.trivial.verdict != V::Exists) {
    rep.message = "trivial automorphisms not certified: " + rep.trivial.diagnostics;
  } else if (rep.quasi_trivial.verdict == V::Exists) {
    rep.signature = AutSignature::TxZ2;
    rep.message = "a quasi-trivial automorphism exists";
  } else if (rep.quasi_trivial.verdict == V::None) {
    rep.signature = AutSignature::T;
    rep.message = "no quasi-trivial automorphism (1 in the saturated ideal)";
  } else {
    rep.message = "quasi-trivial search: " + rep.quasi_trivial.diagnostics;
  }
  return rep;
}

ShapeCheck graded_map_shape_check(const Presentation& source, const Presentation& target, const BuchbergerOptions& options) {
  ShapeCheck out;
  MorphismSystem ms = morphism_system(source, target, MapShape::General);
  auto a = [&](int i, int j) { return ms.map.matrix[i - 1][j - 1].numerator(); };
  auto any = inconsistency_certificate(ms.equations, {ms.determinant}, options);
  if (!any.inconsistent() && any.basis.empty()) {
    out.message = "budget exhausted: " + any.diagnostics;
    return out;
  }
  out.any_solution = !any.inconsistent();
  std::vector<std::pair<std::string, ParamPoly>> conds = {
      {"a13 = 0", a(1, 3)},
      {"a23 = 0", a(2, 3)},
      {"a31 = 0", a(3, 1)},
      {"a32 = 0", a(3, 2)},
      {"a11 a12 = 0", a(1, 1) * a(1, 2)},
      {"a11 a21 = 0", a(1, 1) * a(2, 1)},
      {"a11 (a11 - a22) = 0", a(1, 1) * (a(1, 1) - a(2, 2))},
      {"a22 a12 = 0", a(2, 2) * a(1, 2)},
  };
  // Jordan-type relations admit no quasi-trivial maps.
  if (genericity(source).jordan) {
    conds.push_back({"a12 = 0", a(1, 2)});
    conds.push_back({"a21 = 0", a(2, 1)});
  }
  out.pass = true;
  bool unknown = false;
  for (auto& [name, g] : conds) {
    bool holds = true;
    if (out.any_solution) {
      auto r = inconsistency_certificate(ms.equations, {ms.determinant, g}, options);
      holds = r.inconsistent();
      if (!holds && r.basis.empty()) unknown = true;
    }
    out.conditions.emplace_back(name, holds);
    out.pass = out.pass && holds;
  }
  if (!out.any_solution)
    out.message = "no graded isomorphism exists";
  else if (out.pass)
    out.message = "every graded isomorphism is trivial or quasi-trivial";
  else
    out.message = unknown ? "budget exhausted on a shape condition" : "a graded isomorphism outside the two shapes exists";
  return out;
}

}  // namespace ncalg
