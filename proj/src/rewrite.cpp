#include "ncalg/rewrite.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "ncalg/errors.hpp"

namespace ncalg {

RewriteRule make_rule(const NcPoly& relation, const Alphabet& alphabet, std::string label) {
  if (relation.is_zero()) throw InputError("cannot orient the zero relation" + (label.empty() ? "" : " " + label));
  if (!relation.is_bihomogeneous(alphabet))
    throw InputError("relation " + (label.empty() ? relation.to_string(alphabet) : label) + " is not bihomogeneous");
  RewriteRule r;
  r.label = std::move(label);
  r.lead = relation.leading_word();
  const Scalar& lc = relation.leading_coefficient();
  Scalar inv = lc.inverse();
  std::vector<NcPoly::Term> tail;
  for (std::size_t i = 1; i < relation.terms().size(); ++i) {
    auto& [w, c] = relation.terms()[i];
    tail.emplace_back(w, -(c * inv));
  }
  r.tail = NcPoly::from_terms(std::move(tail));
  if (!lc.is_rational()) r.side_conditions.push_back(lc.numerator());
  return r;
}

int RewriteSystem::max_rule_degree() const {
  int d = 0;
  for (auto& r : rules) d = std::max(d, r.lead.degree);
  return d;
}

void RewriteSystem::add_side_conditions(const std::vector<ParamPoly>& conds) {
  for (auto& c : conds) {
    ParamPoly m = c.monic();
    if (m.is_constant()) continue;
    if (std::find(side_conditions.begin(), side_conditions.end(), m) == side_conditions.end())
      side_conditions.push_back(m);
  }
}

RewriteSystem make_system(const Alphabet& alphabet, const std::vector<NcPoly>& relations,
                          const std::vector<std::string>& labels) {
  RewriteSystem sys;
  sys.alphabet = alphabet;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    std::string label = i < labels.size() ? labels[i] : "r" + std::to_string(i + 1);
    RewriteRule r = make_rule(relations[i], alphabet, label);
    sys.add_side_conditions(r.side_conditions);
    sys.rules.push_back(std::move(r));
  }
  return sys;
}

bool choose_rewrite(const RewriteSystem& sys, const Word& w, RewriteSite& site) {
  for (std::size_t i = 0; i < sys.rules.size(); ++i) {
    const Word& lead = sys.rules[i].lead;
    if (lead.size() > w.size()) continue;
    std::size_t pos = w.find(lead);
    if (pos != std::string::npos) {
      site = {i, pos};
      return true;
    }
  }
  return false;
}

NcPoly rewrite_once(const RewriteSystem& sys, const Word& w, const RewriteSite& site) {
  const RewriteRule& r = sys.rules[site.rule];
  std::vector<NcPoly::Term> out;
  out.reserve(r.tail.size());
  for (auto& [t, c] : r.tail.terms()) out.emplace_back(w.replaced(site.pos, r.lead.size(), r.lead.degree, t), c);
  return NcPoly::from_terms(std::move(out));
}

bool is_irreducible(const Word& w, const RewriteSystem& sys) {
  RewriteSite s;
  return !choose_rewrite(sys, w, s);
}

const NcPoly& Reducer::normal_form(const Word& w) {
  auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;
  RewriteSite site;
  if (!choose_rewrite(sys_, w, site)) return cache_.emplace(w, NcPoly(w)).first->second;
  ++steps_;
  const RewriteRule& r = sys_.rules[site.rule];
  std::unordered_map<Word, Scalar, WordHash> acc;
  for (auto& [t, c] : r.tail.terms()) {
    Word next = w.replaced(site.pos, r.lead.size(), r.lead.degree, t);
    const NcPoly& nf = normal_form(next);
    for (auto& [v, d] : nf.terms()) {
      auto [slot, inserted] = acc.try_emplace(v, Scalar());
      slot->second += c * d;
    }
  }
  std::vector<NcPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [v, d] : acc)
    if (!d.is_zero()) terms.emplace_back(v, d);
  return cache_.emplace(w, NcPoly::from_terms(std::move(terms))).first->second;
}

NcPoly Reducer::reduce(const NcPoly& f) {
  std::unordered_map<Word, Scalar, WordHash> acc;
  for (auto& [w, c] : f.terms()) {
    const NcPoly& nf = normal_form(w);
    for (auto& [v, d] : nf.terms()) {
      auto [slot, inserted] = acc.try_emplace(v, Scalar());
      slot->second += c * d;
    }
  }
  std::vector<NcPoly::Term> terms;
  for (auto& [v, d] : acc)
    if (!d.is_zero()) terms.emplace_back(v, d);
  return NcPoly::from_terms(std::move(terms));
}

NcPoly reduce(const NcPoly& f, const RewriteSystem& sys) {
  Reducer r(sys);
  return r.reduce(f);
}

TracedReduction reduce_traced(const NcPoly& f, const RewriteSystem& sys) {
  TracedReduction out;
  NcPoly cur = f;
  for (;;) {
    bool found = false;
    for (auto& [w, c] : cur.terms()) {
      RewriteSite site;
      if (!choose_rewrite(sys, w, site)) continue;
      out.trace.push_back({w, site});
      Word word = w;
      Scalar coeff = c;
      cur = cur - NcPoly(word, coeff) + rewrite_once(sys, word, site).scaled(coeff);
      found = true;
      break;
    }
    if (!found) break;
  }
  out.normal_form = cur;
  return out;
}

std::vector<Ambiguity> find_ambiguities(const RewriteSystem& sys, int max_degree, int min_degree) {
  std::vector<Ambiguity> out;
  const auto& rules = sys.rules;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& li = rules[i].lead;
    if (li.empty()) continue;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& lj = rules[j].lead;
      if (lj.empty()) continue;
      std::size_t m = std::min(li.size(), lj.size());
      for (std::size_t k = 1; k < m; ++k) {
        if (li.letters.compare(li.size() - k, k, lj.letters, 0, k) != 0) continue;
        int overlap_deg = sys.alphabet.degree_of(std::string_view(lj.letters).substr(0, k));
        int deg = li.degree + lj.degree - overlap_deg;
        if (deg < min_degree || deg > max_degree) continue;
        Word witness{li.letters + lj.letters.substr(k), deg};
        out.push_back({Ambiguity::Kind::Overlap, i, j, std::move(witness), 0, li.size() - k});
      }
      if (i == j || lj.size() > li.size()) continue;
      if (li.degree < min_degree || li.degree > max_degree) continue;
      if (lj == li && j < i) continue;
      for (std::size_t p = li.find(lj); p != std::string::npos; p = li.find(lj, p + 1))
        out.push_back({Ambiguity::Kind::Inclusion, i, j, li, 0, p});
    }
  }
  std::sort(out.begin(), out.end(), [](const Ambiguity& a, const Ambiguity& b) {
    if (a.witness != b.witness) return a.witness < b.witness;
    return std::tie(a.kind, a.rule_left, a.rule_right, a.pos_right) <
           std::tie(b.kind, b.rule_left, b.rule_right, b.pos_right);
  });
  return out;
}

NcPoly resolve_ambiguity(const Ambiguity& amb, const RewriteSystem& sys, Reducer& reducer) {
  NcPoly left = rewrite_once(sys, amb.witness, {amb.rule_left, amb.pos_left});
  NcPoly right = rewrite_once(sys, amb.witness, {amb.rule_right, amb.pos_right});
  return reducer.reduce(left - right);
}

NcPoly resolve_ambiguity(const Ambiguity& amb, const RewriteSystem& sys) {
  Reducer r(sys);
  return resolve_ambiguity(amb, sys, r);
}

std::vector<NcPoly> resolve_all(const std::vector<Ambiguity>& ambs, const RewriteSystem& sys, unsigned jobs) {
  std::vector<NcPoly> out(ambs.size());
  if (jobs <= 1 || ambs.size() < 2) {
    Reducer r(sys);
    for (std::size_t k = 0; k < ambs.size(); ++k) out[k] = resolve_ambiguity(ambs[k], sys, r);
    return out;
  }
  unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(ambs.size()));
  std::vector<std::thread> workers;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned t = 0; t < n; ++t) {
    workers.emplace_back([&, t] {
      try {
        Reducer r(sys);
        for (std::size_t k = t; k < ambs.size(); k += n) out[k] = resolve_ambiguity(ambs[k], sys, r);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
  return out;
}

std::string describe(const Ambiguity& amb, const RewriteSystem& sys) {
  std::ostringstream os;
  os << (amb.kind == Ambiguity::Kind::Overlap ? "overlap " : "inclusion ") << sys.rules[amb.rule_left].label << "/"
     << sys.rules[amb.rule_right].label << " at " << sys.alphabet.to_string(amb.witness);
  return os.str();
}

namespace {

// Removes rules whose lead contains another rule's lead and re-adds their
// reduced relations.
void interreduce(CompletionResult& res) {
  auto& sys = res.system;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < sys.rules.size(); ++i) {
      bool covered = false;
      for (std::size_t j = 0; j < sys.rules.size() && !covered; ++j) {
        if (i == j) continue;
        const Word& li = sys.rules[i].lead;
        const Word& lj = sys.rules[j].lead;
        if (lj.size() > li.size() || !li.contains(lj)) continue;
        if (lj == li && j > i) continue;  // keep the earlier of two equal leads
        covered = true;
      }
      if (!covered) continue;
      RewriteRule old = sys.rules[i];
      sys.rules.erase(sys.rules.begin() + static_cast<std::ptrdiff_t>(i));
      res.removed.push_back(old.label);
      NcPoly rest = reduce(old.relation(), sys);
      res.log.push_back("interreduce: removed " + old.label);
      if (!rest.is_zero()) {
        RewriteRule r = make_rule(rest, sys.alphabet, old.label + "'");
        sys.add_side_conditions(r.side_conditions);
        res.log.push_back("interreduce: re-added " + r.label + " with lead " + sys.alphabet.to_string(r.lead));
        sys.rules.push_back(std::move(r));
      }
      changed = true;
      break;
    }
  }
}

}  // namespace

CompletionResult complete(const RewriteSystem& sys, int max_degree, const CompletionOptions& options) {
  CompletionResult res;
  res.system = sys;
  for (auto& r : res.system.rules) res.system.add_side_conditions(r.side_conditions);
  std::size_t label_counter = sys.rules.size();
  interreduce(res);
  for (int d = 1; d <= max_degree; ++d) {
    for (;;) {
      auto ambs = find_ambiguities(res.system, d, d);
      if (ambs.empty()) break;
      auto results = resolve_all(ambs, res.system, options.jobs);
      bool added_any = false;
      for (std::size_t k = 0; k < ambs.size(); ++k) {
        if (results[k].is_zero()) continue;
        // Earlier additions in this round may already account for it.
        NcPoly rest = added_any ? reduce(results[k], res.system) : results[k];
        if (rest.is_zero()) continue;
        if (res.added.size() >= options.max_new_rules) {
          std::ostringstream os;
          os << "completion budget of " << options.max_new_rules << " new rules exceeded at degree " << d;
          for (auto& line : res.log) os << "\n  " << line;
          throw BudgetExceeded(os.str());
        }
        RewriteRule r = make_rule(rest, res.system.alphabet, "r" + std::to_string(++label_counter));
        res.system.add_side_conditions(r.side_conditions);
        res.log.push_back("degree " + std::to_string(d) + ": " + describe(ambs[k], res.system) + " gives " + r.label +
                          " with lead " + res.system.alphabet.to_string(r.lead));
        res.added.push_back(r);
        res.system.rules.push_back(std::move(r));
        added_any = true;
      }
      if (!added_any) break;
      interreduce(res);
    }
  }
  return res;
}

namespace {

bool suffix_reducible(const std::string& cur, const RewriteSystem& sys) {
  for (auto& r : sys.rules) {
    const auto& l = r.lead.letters;
    if (l.size() <= cur.size() && cur.compare(cur.size() - l.size(), l.size(), l) == 0) return true;
  }
  return false;
}

template <class Visit>
void enumerate_irreducible(const RewriteSystem& sys, int degree, Visit&& visit) {
  std::string cur;
  const auto& gens = sys.alphabet.generators();
  for (auto& r : sys.rules)
    if (r.lead.empty()) return;  // the algebra is zero
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      visit(cur);
      return;
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int d = gens[i].degree();
      if (d > left) continue;
      cur.push_back(static_cast<char>(i));
      if (!suffix_reducible(cur, sys)) self(self, left - d);
      cur.pop_back();
    }
  };
  rec(rec, degree);
}

}  // namespace

std::vector<Word> irreducible_words(const RewriteSystem& sys, int degree) {
  std::vector<Word> out;
  if (degree < 0) return out;
  enumerate_irreducible(sys, degree, [&](const std::string& s) { out.push_back({s, degree}); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> irreducible_words(const RewriteSystem& sys, Bidegree bidegree) {
  std::vector<Word> out;
  for (auto& w : irreducible_words(sys, bidegree.first + bidegree.second))
    if (sys.alphabet.bidegree(w) == bidegree) out.push_back(w);
  return out;
}

std::vector<std::vector<long>> irreducible_counts_bigraded(const RewriteSystem& sys, int bound) {
  std::vector<std::vector<long>> counts;
  for (int d = 0; d <= bound; ++d) {
    std::vector<long> row(static_cast<std::size_t>(d) + 1, 0);
    enumerate_irreducible(sys, d, [&](const std::string& s) {
      Word w{s, d};
      row[static_cast<std::size_t>(sys.alphabet.bidegree(w).first)]++;
    });
    counts.push_back(std::move(row));
  }
  return counts;
}

}  // namespace ncalg
