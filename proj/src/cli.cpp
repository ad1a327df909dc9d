#include "ncalg/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ncalg/catalog.hpp"
#include "ncalg/classify.hpp"
#include "ncalg/errors.hpp"
#include "ncalg/format.hpp"
#include "ncalg/isomorphism.hpp"
#include "ncalg/normal.hpp"
#include "ncalg/resolution.hpp"
#include "ncalg/symbols.hpp"

namespace ncalg {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Unknown: return "UNKNOWN";
  }
  return "?";
}

int RunReport::exit_code() const {
  bool unknown = false;
  for (auto& c : checks) {
    if (c.status == Status::Fail) return 1;
    unknown = unknown || c.status == Status::Unknown;
  }
  return unknown ? 3 : 0;
}

std::string RunReport::text(bool timings) const {
  std::ostringstream os;
  os << tool_version << " " << command << "\n";
  os << "input " << input_digest << "\n";
  std::size_t width = 0;
  for (auto& c : checks) width = std::max(width, c.id.size());
  int counts[3] = {0, 0, 0};
  for (auto& c : checks) {
    ++counts[static_cast<int>(c.status)];
    os << std::left << std::setw(8) << to_string(c.status) << std::setw(static_cast<int>(width) + 2) << c.id << c.details;
    if (timings) os << " [" << std::fixed << std::setprecision(3) << c.seconds << "s]";
    os << "\n";
  }
  os << "summary: " << counts[0] << " PASS, " << counts[1] << " FAIL, " << counts[2] << " UNKNOWN\n";
  return os.str();
}

std::string RunReport::json(bool timings) const {
  nlohmann::ordered_json doc;
  doc["tool_version"] = tool_version;
  doc["command"] = command;
  doc["input_digest"] = input_digest;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (auto& c : checks) {
    nlohmann::ordered_json r;
    r["id"] = c.id;
    r["status"] = to_string(c.status);
    r["details"] = c.details;
    if (timings) r["wall_time"] = c.seconds;
    arr.push_back(r);
  }
  doc["checks"] = arr;
  doc["exit_code"] = exit_code();
  return doc.dump(1) + "\n";
}

std::string digest(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

namespace {

struct Outcome {
  Status status;
  std::string details;
};

void run_check(RunReport& rep, const std::string& id, const std::function<Outcome()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const BudgetExceeded& e) {
    o = {Status::Unknown, std::string("budget exhausted: ") + e.what()};
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  rep.checks.push_back({id, o.status, o.details, s});
}

Status pass_if(bool b) { return b ? Status::Pass : Status::Fail; }

CompletionOptions completion_options(const RunOptions& o) {
  CompletionOptions c;
  c.jobs = std::max(1u, o.jobs);
  return c;
}

BuchbergerOptions buchberger_options(const RunOptions& o) {
  BuchbergerOptions b;
  b.max_pair_reductions = o.budget;
  return b;
}

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string out;
  for (auto& s : v) out += (out.empty() ? "" : sep) + s;
  return out;
}

std::string options_key(const RunOptions& o) {
  return "bound=" + std::to_string(o.bound) + ";symbolic=" + std::to_string(o.symbolic) +
         ";seed=" + std::to_string(o.seed) + ";budget=" + std::to_string(o.budget);
}

std::string params_key(const std::map<std::string, std::string>& p) {
  std::string s;
  for (auto& [k, v] : p) s += k + "=" + v + ";";
  return s;
}

std::string counts_text(const std::vector<std::vector<long>>& counts) {
  std::vector<std::string> t;
  for (auto& row : counts) {
    long sum = 0;
    for (long c : row) sum += c;
    t.push_back(std::to_string(sum));
  }
  return join(t, " ");
}

/// Checks shared by verify-family and check.
void core_suite(RunReport& rep, const Presentation& pres, const RunOptions& o) {
  auto copts = completion_options(o);
  run_check(rep, "completion", [&] {
    auto d = diamond_check(pres, o.bound, copts);
    std::string det = d.message;
    if (!d.side_conditions.empty()) det += "; side conditions {" + join(d.side_conditions) + "}";
    return Outcome{pass_if(d.pass), det};
  });
  for (bool bi : {false, true}) {
    run_check(rep, bi ? "hilbert.bigraded" : "hilbert.total", [&] {
      auto s = candidate_series(pres, bi);
      if (!s) {
        auto done = complete(pres, o.bound, copts);
        return Outcome{Status::Unknown, "no regular resolution shape fits the relation degrees; counts " +
                                            counts_text(irreducible_counts_bigraded(done.system, o.bound))};
      }
      auto h = hilbert_check(pres, o.bound, *s, copts);
      return Outcome{pass_if(h.pass), h.summary()};
    });
  }
  if (pres.is_numeric()) {
    run_check(rep, "normal.degree1", [&] {
      auto r = degree1_normal_search(pres, buchberger_options(o));
      std::vector<std::string> found;
      for (auto& e : r.elements) found.push_back(e.to_string(pres.alphabet));
      switch (r.verdict) {
        case Degree1NormalResult::Verdict::Found:
          return Outcome{Status::Pass, "normal: " + join(found) +
                                           (r.families.empty() ? "" : "; families: " + join(r.families, " | "))};
        case Degree1NormalResult::Verdict::None:
          return Outcome{Status::Pass, "no degree-1 normal element"};
        case Degree1NormalResult::Verdict::Unknown:
          break;
      }
      return Outcome{Status::Unknown, r.diagnostics};
    });
  }
}

bool params_compatible(const std::map<std::string, std::string>& user, const std::map<std::string, std::string>& claim,
                       std::map<std::string, std::string>& merged) {
  merged = user;
  for (auto& [k, v] : claim) {
    auto it = user.find(k);
    if (it == user.end()) {
      merged[k] = v;
      continue;
    }
    if (it->second != v && !(parse_scalar(it->second) == parse_scalar(v))) return false;
  }
  return true;
}

std::string point_name(const std::string& id, const std::map<std::string, std::string>& params) {
  if (params.empty()) return id;
  std::vector<std::string> parts;
  for (auto& [k, v] : params) parts.push_back(k + "=" + v);
  return id + "{" + join(parts, ",") + "}";
}

void normal_claim_check(RunReport& rep, const std::string& id, const Presentation& inst, const NcPoly& z,
                        const RunOptions& o) {
  auto copts = completion_options(o);
  run_check(rep, id, [&] {
    auto r = verify_normal(z, inst, copts);
    if (!r.normal()) return Outcome{Status::Fail, z.to_string(inst.alphabet) + " is not normal: " + r.failure};
    return Outcome{Status::Pass, z.to_string(inst.alphabet) + " is normal"};
  });
  if (inst.is_numeric())
    run_check(rep, id + ".quotient", [&] {
      auto q = quotient_series_check(inst, z, o.bound, copts);
      return Outcome{pass_if(q.pass()), q.summary()};
    });
}

void family_claims(RunReport& rep, const std::string& id, const std::map<std::string, std::string>& params,
                   const RunOptions& o) {
  auto copts = completion_options(o);
  for (auto& c : normal_claims()) {
    std::map<std::string, std::string> merged;
    if (c.family != id || !params_compatible(params, c.params, merged)) continue;
    Presentation inst = family_from_strings(id, merged);
    normal_claim_check(rep, "normal." + c.tag, inst, family_element(id, c.element, merged), o);
  }
  // Scaled form of the H(1) normal element; checked at every b but not a catalog claim.
  if (id == "H" && !(params.count("b") && parse_scalar(params.at("b")) == parse_scalar("1"))) {
    Presentation inst = family_from_strings(id, params);
    normal_claim_check(rep, "normal.H-general-b", inst, family_element(id, "x3*x1 - b*x1*x3", params), o);
  }
  for (auto& c : chain_claims()) {
    std::map<std::string, std::string> merged;
    if (c.family != id || !params_compatible(params, c.params, merged)) continue;
    run_check(rep, "chain." + c.tag, [&] {
      Presentation inst = family_from_strings(id, merged);
      auto r = verify_chain(inst, c.steps, c.finite_bound, copts);
      bool dim_ok = !c.expected_dimension || (r.terminal.finite && r.terminal.basis.size() == *c.expected_dimension);
      std::string det = join(r.lines, "; ");
      if (r.terminal.finite) det += "; terminal dimension " + std::to_string(r.terminal.basis.size());
      return Outcome{pass_if(r.pass && dim_ok), det};
    });
  }
}

void resolution_suite(RunReport& rep, const std::string& id, const Presentation& pres, const FreeComplex& cx,
                      const RunOptions& o) {
  auto copts = completion_options(o);
  run_check(rep, id + ".complex", [&] {
    auto r = verify_complex(cx, pres, copts);
    return Outcome{pass_if(r.pass), r.pass ? "consecutive maps compose to zero" : join(r.failures, "; ")};
  });
  run_check(rep, id + ".shape", [&] {
    auto r = verify_resolution_shape(cx, pres);
    return Outcome{pass_if(r.pass), r.message};
  });
  run_check(rep, id + ".euler", [&] {
    bool ok = euler_check(cx.euler_shifts(), standard_series());
    return Outcome{pass_if(ok), ok ? "alternating sum of shifted series matches" : "Euler characteristic mismatch"};
  });
  run_check(rep, id + ".transcription", [&] {
    auto r = check_transcription(cx, pres);
    return Outcome{pass_if(r.pass), r.message};
  });
}

/// Matrices are written over the data point; user parameters beyond it
/// are substituted afterwards.
FreeComplex data_complex(const ResolutionData& d, const Presentation& inst,
                         const std::map<std::string, std::string>& user) {
  Presentation base = family_from_strings(d.family, d.params);
  FreeComplex cx = build_standard_complex(base, d.d3, d.d2);
  std::map<std::string, Scalar> values;
  for (auto& [k, v] : user)
    if (!d.params.count(k)) values[k] = parse_scalar(v);
  if (values.empty()) return cx;
  auto spec = [&](const NcMatrix& m) {
    auto e = m.entries;
    for (auto& row : e)
      for (auto& x : row) x = substitute(x, base, values);
    return make_matrix(e, m.row_shifts, m.col_shifts, inst.alphabet);
  };
  return build_standard_complex(inst, spec(cx.maps[1]), spec(cx.maps[2]));
}

std::map<std::string, std::string> family_point_params(const std::string& id, const std::map<std::string, std::string>& params,
                                                       bool symbolic) {
  if (!symbolic)
    for (auto& k : family_parameters(id))
      if (!params.count(k))
        throw InputError("family " + id + " needs --" + k + " (or --symbolic)");
  for (auto& [k, v] : params) {
    auto fp = family_parameters(id);
    if (k != "gamma" && std::find(fp.begin(), fp.end(), k) == fp.end())
      throw InputError("family " + id + " has no parameter '" + k + "'");
  }
  return params;
}

}  // namespace

DiamondReport diamond_check(const Presentation& pres, int bound, const CompletionOptions& options) {
  DiamondReport d;
  auto done = complete(pres, bound, options);
  for (auto& r : done.added) {
    d.added.push_back(r.relation().to_string(pres.alphabet));
    d.added_leads.push_back(pres.alphabet.to_string(r.lead));
  }
  auto amb = find_ambiguities(done.system, bound);
  d.ambiguities = amb.size();
  for (auto& r : resolve_all(amb, done.system, options.jobs)) d.unresolved += !r.is_zero();
  for (auto& c : done.system.side_conditions) d.side_conditions.push_back(c.to_string());
  d.pass = d.unresolved == 0;
  d.message = std::to_string(pres.relations.size()) + " relations, " + std::to_string(d.added.size()) +
              " rules added" + (d.added_leads.empty() ? "" : " (leads " + join(d.added_leads) + ")") + "; " +
              std::to_string(d.ambiguities) + " ambiguities through degree " + std::to_string(bound) + ", " +
              std::to_string(d.unresolved) + " unresolved";
  return d;
}

std::optional<SeriesExpr> candidate_series(const Presentation& pres, bool bivariate) {
  using V = Bidegree;
  auto key = [&](V b) { return bivariate ? b : V{b.first + b.second, 0}; };
  std::vector<V> gens, rels;
  for (auto& g : pres.alphabet.generators()) gens.push_back(key(g.bidegree));
  for (auto& r : pres.relations) {
    auto b = r.bidegree(pres.alphabet);
    if (!b) return std::nullopt;
    rels.push_back(key(*b));
  }
  std::sort(gens.begin(), gens.end());
  std::sort(rels.begin(), rels.end());
  std::size_t n = gens.size(), m = rels.size();
  auto minus = [](V l, const std::vector<V>& v) {
    std::vector<V> out;
    for (auto& x : v) out.push_back({l.first - x.first, l.second - x.second});
    std::sort(out.begin(), out.end());
    return out;
  };
  SeriesPoly p;
  auto add = [&](V b, long c) {
    p[b] += Rational(c);
    if (p[b] == 0) p.erase(b);
  };
  auto sum = [](const std::vector<V>& v) {
    V s{0, 0};
    for (auto& x : v) s = {s.first + x.first, s.second + x.second};
    return s;
  };
  add({0, 0}, 1);
  for (auto& g : gens) add(g, -1);
  if (n == 2 && m == 1) {
    V l = rels[0];
    if (minus(l, gens) != gens) return std::nullopt;
    add(l, 1);
  } else if (m == n && n > 0) {
    V s = {sum(rels).first + sum(gens).first, sum(rels).second + sum(gens).second};
    if (s.first % static_cast<int>(n) || s.second % static_cast<int>(n)) return std::nullopt;
    V l{s.first / static_cast<int>(n), s.second / static_cast<int>(n)};
    if (minus(l, gens) != rels) return std::nullopt;
    for (auto& r : rels) add(r, 1);
    add(l, -1);
  } else if (m == 2 * n - 2 && m > 0) {
    V s = sum(rels);
    int half = static_cast<int>(m / 2);
    if (s.first % half || s.second % half) return std::nullopt;
    V l{s.first / half, s.second / half};
    if (minus(l, rels) != rels) return std::nullopt;
    for (auto& r : rels) add(r, 1);
    for (auto& x : minus(l, gens)) add(x, -1);
    add(l, 1);
  } else {
    return std::nullopt;
  }
  SeriesExpr e;
  e.bivariate = bivariate;
  e.numerator = {{{0, 0}, Rational(1)}};
  e.denominator = p;
  return e;
}

RunReport cmd_verify_family(const std::string& name, const std::map<std::string, std::string>& params,
                            const RunOptions& o) {
  if (!is_family(name)) throw InputError("unknown family '" + name + "'");
  auto ps = family_point_params(name, params, o.symbolic);
  Presentation pres = family_from_strings(name, ps);
  RunReport rep;
  rep.command = "verify-family " + pres.name;
  rep.input_digest = digest("verify-family;" + name + ";" + params_key(ps) + options_key(o));
  core_suite(rep, pres, o);
  family_claims(rep, name, ps, o);
  for (auto& d : resolution_data()) {
    std::map<std::string, std::string> merged;
    if (d.family != name || !params_compatible(ps, d.params, merged)) continue;
    Presentation inst = family_from_strings(name, merged);
    resolution_suite(rep, "resolution." + point_name(name, d.params), inst, data_complex(d, inst, ps), o);
  }
  if (o.symbolic)
    for (auto& c : ore_claims()) {
      if (c.family != name) continue;
      run_check(rep, "ore." + name, [&] {
        auto r = verify_inverse_maps(c.ore, c.target, c.phi, c.psi, completion_options(o));
        std::vector<std::string> why = r.forward.failures;
        for (auto& f : r.backward.failures) why.push_back(f);
        for (auto& f : r.composite_failures) why.push_back(f);
        return Outcome{pass_if(r.pass), r.pass ? c.ore.name + " and " + c.target.name + " are isomorphic by inverse maps"
                                               : join(why, "; ")};
      });
    }
  return rep;
}

RunReport cmd_classify(const std::string& case_id, const RunOptions& o) {
  if (!is_template(case_id)) throw InputError("unknown case '" + case_id + "'");
  RunReport rep;
  rep.command = "classify " + case_id;
  rep.input_digest = digest("classify;" + case_id + ";" + options_key(o));
  auto bopts = buchberger_options(o);
  std::optional<CoefficientSystem> cs;
  if (case_id != "THzero") {
    run_check(rep, "overlaps", [&] {
      cs = overlap_system(case_id);
      std::set<std::string> rels;
      for (auto& e : cs->entries) rels.insert(e.relation);
      return Outcome{Status::Pass, std::to_string(cs->entries.size()) + " coefficients from " +
                                       join(std::vector<std::string>(rels.begin(), rels.end())) +
                                       (cs->new_relations.empty() ? "" : "; " + std::to_string(cs->new_relations.size()) + " new rule")};
    });
  }
  auto certificate = [&](const std::string& id, const std::map<std::string, Scalar>& red,
                         const std::vector<std::string>& extra) {
    run_check(rep, id, [&] {
      auto r = no_solution_certificate(*cs, red, extra, bopts);
      if (r.inconsistent())
        return Outcome{Status::Pass, "Inconsistent: " + (r.witness.empty() ? r.diagnostics : r.witness)};
      return Outcome{Status::Unknown, r.diagnostics};
    });
  };
  if (case_id == "TL") {
    run_check(rep, "displayed", [&] {
      auto d = verify_displayed("TL");
      std::size_t bad = 0;
      for (auto& g : d.lines) bad += !g.match;
      std::string det = std::to_string(d.lines.size() - bad) + "/" + std::to_string(d.lines.size()) + " golden coefficients match";
      for (auto& [rel, s] : d.sign)
        if (s < 0) det += "; " + rel + " matches up to sign";
      if (!d.extra.empty()) det += "; extra: " + join(d.extra, " | ");
      for (auto& g : d.lines)
        if (!g.match) det += "; mismatch " + g.relation + ": want " + g.expected_text + ", have " + g.computed;
      return Outcome{pass_if(d.pass), det};
    });
    for (auto& id : family_ids()) {
      if (id == "H") continue;
      run_check(rep, "solves." + id, [&] {
        auto r = family_solves(family(id), *cs);
        return Outcome{pass_if(r.pass), r.message + (r.pass ? "" : ": " + join(r.nonzero, "; "))};
      });
    }
    run_check(rep, "generic-points", [&] {
      std::mt19937_64 rng(o.seed);
      std::uniform_int_distribution<int> dist(-9, 9);
      int hits = 0;
      const int points = 25;
      for (int i = 0; i < points; ++i) {
        std::map<SymbolId, Rational> at;
        for (auto s : cs->tmpl.parameter_ids()) {
          int v = 0;
          while (v == 0) v = dist(rng);
          at[s] = Rational(v);
        }
        bool nonzero = false;
        for (auto& e : cs->entries) {
          try {
            if (e.value.evaluate(at) != 0) {
              nonzero = true;
              break;
            }
          } catch (const PoleError&) {
          }
        }
        hits += nonzero;
      }
      return Outcome{pass_if(hits == points),
                     std::to_string(hits) + "/" + std::to_string(points) + " random points have a nonzero coefficient"};
    });
  } else if (case_id == "TJ") {
    run_check(rep, "solves.H", [&] {
      auto r = family_solves(family("H"), *cs);
      return Outcome{pass_if(r.pass), r.message + (r.pass ? "" : ": " + join(r.nonzero, "; "))};
    });
  } else if (case_id == "S32") {
    certificate("certificate", {}, {});
  } else if (case_id == "TK") {
    certificate("certificate.p1-m0", {{"m", 0L}, {"p", 1L}, {"a", 0L}, {"b", 0L}, {"n", 1L}}, {});
    certificate("certificate.quantum", {{"m", 0L}, {"n", 1L}}, {"a", "b", "p - 1", "d - b*c"});
    certificate("certificate.jordan.c-nonzero", {{"m", 1L}, {"p", 1L}, {"a", 0L}}, {"c"});
    certificate("certificate.jordan.d-nonzero", {{"m", 1L}, {"p", 1L}, {"a", 0L}, {"c", 0L}}, {"d"});
  }
  if (case_id == "TH" || case_id == "THzero") {
    run_check(rep, "structural", [&] {
      auto r = structural_certificate(case_id);
      return Outcome{pass_if(r.pass), (r.forcing.empty() ? "" : r.forcing + "; ") + r.message};
    });
  }
  return rep;
}

RunReport cmd_check(const std::string& path, const RunOptions& o) {
  PresentationFile file = read_presentation_file(path);
  const Presentation& pres = file.presentation;
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  RunReport rep;
  rep.command = "check " + pres.name;
  rep.input_digest = digest("check;" + ss.str() + options_key(o));
  core_suite(rep, pres, o);
  if (file.d3 && file.d2) {
    NcMatrix d3 = parse_matrix(file.d3->entries, file.d3->row_shifts, file.d3->col_shifts, pres);
    NcMatrix d2 = parse_matrix(file.d2->entries, file.d2->row_shifts, file.d2->col_shifts, pres);
    resolution_suite(rep, "resolution", pres, build_standard_complex(pres, d3, d2), o);
  }
  for (auto& c : file.claims) {
    run_check(rep, "claim." + c.tag, [&] {
      if (c.images.size() != pres.alphabet.size()) throw InputError("claim " + c.tag + " needs one image per generator");
      std::vector<NcPoly> images;
      for (auto& s : c.images) images.push_back(pres.parse(s));
      auto r = verify_homomorphism(pres, pres, images, completion_options(o));
      return Outcome{pass_if(r.pass), r.pass ? "relations are preserved" : join(r.failures, "; ")};
    });
  }
  return rep;
}

RunReport cmd_hilbert(const Presentation& pres, const std::optional<std::string>& series, const RunOptions& o,
                      const std::string& input) {
  RunReport rep;
  rep.command = "hilbert " + pres.name;
  rep.input_digest = digest("hilbert;" + input + ";" + series.value_or("") + options_key(o));
  auto copts = completion_options(o);
  if (series) {
    run_check(rep, "hilbert", [&] {
      auto h = hilbert_check(pres, o.bound, parse_series(*series), copts);
      return Outcome{pass_if(h.pass), h.summary()};
    });
    return rep;
  }
  for (bool bi : {false, true}) {
    run_check(rep, bi ? "hilbert.bigraded" : "hilbert.total", [&] {
      auto s = candidate_series(pres, bi);
      if (!s) return Outcome{Status::Unknown, "no regular resolution shape fits; pass --series"};
      auto h = hilbert_check(pres, o.bound, *s, copts);
      return Outcome{pass_if(h.pass), h.summary()};
    });
  }
  return rep;
}

RunReport cmd_normal(const Presentation& pres, const std::vector<std::string>& elements, const RunOptions& o,
                     const std::string& input) {
  RunReport rep;
  rep.command = "normal " + pres.name;
  rep.input_digest = digest("normal;" + input + ";" + join(elements, ";") + options_key(o));
  for (std::size_t i = 0; i < elements.size(); ++i)
    normal_claim_check(rep, "normal." + std::to_string(i + 1), pres, pres.parse(elements[i]), o);
  return rep;
}

RunReport cmd_resolution(const std::string& name, const std::map<std::string, std::string>& params, const RunOptions& o) {
  if (!is_family(name)) throw InputError("unknown family '" + name + "'");
  RunReport rep;
  rep.command = "resolution " + name;
  rep.input_digest = digest("resolution;" + name + ";" + params_key(params) + options_key(o));
  bool any = false;
  for (auto& d : resolution_data()) {
    std::map<std::string, std::string> merged;
    if (d.family != name || !params_compatible(params, d.params, merged)) continue;
    any = true;
    Presentation inst = family_from_strings(name, merged);
    resolution_suite(rep, "resolution." + point_name(name, d.params), inst, data_complex(d, inst, params), o);
  }
  if (!any) throw InputError("no resolution data for " + point_name(name, params));
  return rep;
}

namespace {

struct SignaturePoint {
  std::string family;
  std::map<std::string, std::string> params;
  AutSignature expected;
};

std::vector<SignaturePoint> signature_points() {
  using S = AutSignature;
  return {{"A", {{"b", "2"}, {"q", "3"}}, S::T},  {"A", {{"b", "2"}, {"q", "-1"}}, S::TxZ2}, {"B", {{"b", "2"}}, S::TxZ2},
          {"C", {{"b", "2"}}, S::TxZ2},           {"D", {{"b", "2"}, {"h", "5"}}, S::T},     {"D", {{"b", "2"}, {"h", "16"}}, S::TxZ2},
          {"E", {{"b", "2"}}, S::TxZ2},           {"F", {{"b", "2"}}, S::T},                 {"Fu", {{"b", "2"}}, S::T},
          {"G", {{"b", "2"}}, S::TxZ2},           {"H", {{"b", "2"}}, S::T}};
}

}  // namespace

RunReport cmd_iso(const std::optional<std::string>& name, const std::map<std::string, std::string>& params,
                  const std::vector<std::string>& tags, const RunOptions& o) {
  RunReport rep;
  auto bopts = buchberger_options(o);
  auto copts = completion_options(o);
  if (name) {
    if (!is_family(*name)) throw InputError("unknown family '" + *name + "'");
    Presentation pres = family_from_strings(*name, family_point_params(*name, params, false));
    rep.command = "iso " + pres.name;
    rep.input_digest = digest("iso;" + *name + ";" + params_key(params) + options_key(o));
    auto g = genericity(pres);
    if (!g.generic) throw InputError(pres.name + " is not generic: " + g.message);
    run_check(rep, "signature", [&] {
      auto s = autgroup_signature(pres, bopts);
      return Outcome{s.signature == AutSignature::Unknown ? Status::Unknown : Status::Pass,
                     to_string(s.signature) + ": " + s.message};
    });
    run_check(rep, "map-shapes", [&] {
      auto s = graded_map_shape_check(pres, pres, bopts);
      return Outcome{pass_if(s.pass), s.message};
    });
    return rep;
  }
  rep.command = "iso";
  rep.input_digest = digest("iso;" + join(tags, ",") + options_key(o));
  auto claims = catalog_claims();
  for (auto& c : claims) {
    if (!tags.empty() && std::find(tags.begin(), tags.end(), c.tag) == tags.end()) continue;
    run_check(rep, "claim." + c.tag, [&] {
      auto r = verify_morphism(c, copts);
      return Outcome{pass_if(r.pass), c.description + ": " + r.message};
    });
  }
  if (!tags.empty()) return rep;
  for (auto& c : ore_claims())
    run_check(rep, "ore." + c.family, [&] {
      auto r = verify_inverse_maps(c.ore, c.target, c.phi, c.psi, copts);
      return Outcome{pass_if(r.pass), r.pass ? "inverse maps verified" : "ore structure fails"};
    });
  run_check(rep, "opposite-H.general-search", [&] {
    auto s = search_morphisms(opposite(family_from_strings("H", {{"b", "2"}})), family_from_strings("H", {{"b", "-2"}}),
                              MapShape::General, bopts);
    bool none = s.verdict == MorphismSearch::Verdict::None;
    return Outcome{none ? Status::Pass : Status::Unknown,
                   none ? "no graded isomorphism op(H(2)) -> H(-2): 1 lies in the saturated ideal" : s.diagnostics};
  });
  for (auto& pt : signature_points()) {
    Presentation p = family_from_strings(pt.family, pt.params);
    run_check(rep, "signature." + p.name, [&] {
      auto s = autgroup_signature(p, bopts);
      if (s.signature == AutSignature::Unknown) return Outcome{Status::Unknown, s.message};
      return Outcome{pass_if(s.signature == pt.expected),
                     to_string(s.signature) + " (expected " + to_string(pt.expected) + ")"};
    });
  }
  return rep;
}

RunReport cmd_twist(const Presentation& pres, const std::vector<std::string>& weights, const RunOptions& o,
                    std::string* twisted, const std::string& input) {
  RunReport rep;
  rep.command = "twist " + pres.name;
  rep.input_digest = digest("twist;" + input + ";" + join(weights, ",") + options_key(o));
  if (weights.size() != pres.alphabet.size())
    throw InputError("twist needs " + std::to_string(pres.alphabet.size()) + " weights");
  ScalarScope scope;
  scope.ctx = pres.ctx;
  std::vector<Scalar> w;
  for (auto& s : weights) w.push_back(parse_scalar(s, scope));
  Presentation t = graded_twist(pres, w);
  if (twisted) *twisted = write_presentation(t);
  run_check(rep, "twist.automorphism", [&] {
    auto r = verify_homomorphism(pres, pres, LinearMap::diagonal(w).images(pres.alphabet), completion_options(o));
    return Outcome{pass_if(r.pass), r.pass ? "diag(" + join(weights) + ") preserves the relations" : join(r.failures, "; ")};
  });
  run_check(rep, "twist.hilbert", [&] {
    auto s = candidate_series(pres, true);
    if (!s) return Outcome{Status::Unknown, "no candidate series"};
    auto h = hilbert_check(t, o.bound, *s, completion_options(o));
    return Outcome{pass_if(h.pass), h.summary()};
  });
  return rep;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification workbench for bigraded algebras given by generators and relations", "ncalg-cli"};
  // --h is a family parameter, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();
  RunOptions o;
  std::string json_path;
  bool timings = false;
  app.add_option("--bound", o.bound, "Degree bound for completion and series checks")->check(CLI::Range(1, 40));
  app.add_flag("--symbolic", o.symbolic, "Keep unspecified parameters symbolic");
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", o.seed, "Seed for randomized spot checks");
  app.add_option("--budget", o.budget, "Groebner pair-reduction budget");
  app.add_option("--json", json_path, "Write the report as JSON to this path");
  app.add_flag("--timings", timings, "Print wall time per check");

  std::string name, file, case_id, series, output;
  std::map<std::string, std::string> params;
  std::vector<std::string> param_list, elements, tags, weights;
  std::map<std::string, std::string> named;
  auto add_params = [&](CLI::App* sub) {
    for (const char* k : {"b", "q", "h", "gamma"})
      sub->add_option(std::string("--") + k, named[k], std::string("Family parameter ") + k);
    sub->add_option("--param", param_list, "Parameter as key=value (repeatable)");
  };
  auto* vf = app.add_subcommand("verify-family", "Run the verification suites of a catalog family");
  vf->add_option("--name", name, "Family id (A B C D E F Fu G H)")->required();
  add_params(vf);
  auto* cl = app.add_subcommand("classify", "Run the classification pipeline for a template case");
  cl->add_option("--case", case_id, "Case id (TL TK TH THzero TJ S32)")->required();
  auto* ck = app.add_subcommand("check", "Ingest a presentation file");
  ck->add_option("file", file, "Presentation file (JSON, format 1)")->required();
  auto* hi = app.add_subcommand("hilbert", "Hilbert series check");
  auto* no = app.add_subcommand("normal", "Normal-element checks");
  auto* re = app.add_subcommand("resolution", "Free resolution checks for a catalog family");
  re->add_option("--name", name, "Family id")->required();
  add_params(re);
  auto* is = app.add_subcommand("iso", "Isomorphism and automorphism claims");
  is->add_option("--tag", tags, "Only these claim tags");
  auto* tw = app.add_subcommand("twist", "Graded twist by a diagonal automorphism");
  tw->add_option("--weights", weights, "One weight per generator")->delimiter(',')->required();
  tw->add_option("--output", output, "Write the twisted presentation file here");
  for (auto* sub : {hi, no, tw}) {
    sub->add_option("--name", name, "Family id");
    sub->add_option("--file", file, "Presentation file");
    add_params(sub);
  }
  is->add_option("--name", name, "Family id for a signature check");
  add_params(is);
  hi->add_option("--series", series, "Expected series, e.g. 1/((1-t)^3*(1-t^2))");
  no->add_option("--element", elements, "Element to test (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    for (auto& [k, v] : named)
      if (!v.empty()) params[k] = v;
    for (auto& kv : param_list) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw InputError("--param expects key=value, got '" + kv + "'");
      params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    // Presentation from --name/params or --file, for the file-capable subcommands.
    auto load = [&](std::string& input) -> Presentation {
      if (!file.empty() && !name.empty()) throw InputError("give either --name or --file");
      if (!file.empty()) {
        std::ifstream in(file);
        std::stringstream ss;
        ss << in.rdbuf();
        input = ss.str();
        return read_presentation_file(file).presentation;
      }
      if (name.empty()) throw InputError("need --name or --file");
      if (!is_family(name)) throw InputError("unknown family '" + name + "'");
      input = name + ";" + params_key(params);
      return family_from_strings(name, family_point_params(name, params, o.symbolic));
    };
    RunReport rep;
    std::string twisted;
    if (vf->parsed()) {
      rep = cmd_verify_family(name, params, o);
    } else if (cl->parsed()) {
      rep = cmd_classify(case_id, o);
    } else if (ck->parsed()) {
      rep = cmd_check(file, o);
    } else if (hi->parsed()) {
      std::string input;
      Presentation p = load(input);
      rep = cmd_hilbert(p, series.empty() ? std::nullopt : std::optional<std::string>(series), o, input);
    } else if (no->parsed()) {
      std::string input;
      Presentation p = load(input);
      if (!elements.empty()) {
        rep = cmd_normal(p, elements, o, input);
      } else {
        if (name.empty()) throw InputError("normal --file needs --element");
        rep.command = "normal " + p.name;
        rep.input_digest = digest("normal;" + input + options_key(o));
        family_claims(rep, name, params, o);
        if (rep.checks.empty()) throw InputError("no catalog normal-element claims apply to " + p.name);
      }
    } else if (re->parsed()) {
      rep = cmd_resolution(name, params, o);
    } else if (is->parsed()) {
      rep = cmd_iso(name.empty() ? std::nullopt : std::optional<std::string>(name), params, tags, o);
    } else if (tw->parsed()) {
      std::string input;
      Presentation p = load(input);
      rep = cmd_twist(p, weights, o, &twisted, input);
      if (!output.empty()) {
        std::ofstream f(output);
        if (!f) throw InputError("cannot write " + output);
        f << twisted;
      }
    }
    out << rep.text(timings);
    if (tw->parsed() && output.empty()) out << twisted;
    if (!json_path.empty()) {
      std::ofstream f(json_path);
      if (!f) throw InputError("cannot write " + json_path);
      f << rep.json(timings);
    }
    return rep.exit_code();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PoleError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace ncalg
