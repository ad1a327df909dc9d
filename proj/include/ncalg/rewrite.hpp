#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncalg/ncpoly.hpp"

namespace ncalg {

/// lead -> tail, with every tail word smaller than the lead.
struct RewriteRule {
  Word lead;
  NcPoly tail;
  /// Numerators of parametric leading coefficients divided out by make_rule.
  std::vector<ParamPoly> side_conditions;
  std::string label;

  /// lead - tail
  NcPoly relation() const { return NcPoly(lead) - tail; }
};

/// Orients a bihomogeneous nonzero relation by its largest word and makes it
/// monic. Throws InputError for zero or non-bihomogeneous input.
RewriteRule make_rule(const NcPoly& relation, const Alphabet& alphabet, std::string label = {});

struct RewriteSystem {
  Alphabet alphabet;
  std::vector<RewriteRule> rules;
  std::vector<ParamPoly> side_conditions;

  int max_rule_degree() const;
  void add_side_conditions(const std::vector<ParamPoly>& conds);
};

RewriteSystem make_system(const Alphabet& alphabet, const std::vector<NcPoly>& relations,
                          const std::vector<std::string>& labels = {});

/// Position of a rewrite inside a word.
struct RewriteSite {
  std::size_t rule = 0;
  std::size_t pos = 0;
};

/// The fixed strategy's choice for a single word: the earliest-listed rule
/// whose lead occurs, at its leftmost occurrence. Returns false if the word
/// is irreducible.
bool choose_rewrite(const RewriteSystem& sys, const Word& w, RewriteSite& site);

/// Applies one rewrite of `w` at `site`.
NcPoly rewrite_once(const RewriteSystem& sys, const Word& w, const RewriteSite& site);

/// Normal forms under the fixed strategy. Because the strategy's choice
/// depends only on the word being rewritten, the normal form of a
/// polynomial is the sum of the normal forms of its words, which this class
/// memoizes. The system must outlive the reducer and not change under it.
class Reducer {
 public:
  explicit Reducer(const RewriteSystem& sys) : sys_(sys) {}
  const NcPoly& normal_form(const Word& w);
  NcPoly reduce(const NcPoly& f);
  std::size_t steps() const { return steps_; }
  std::size_t cache_size() const { return cache_.size(); }

 private:
  const RewriteSystem& sys_;
  std::unordered_map<Word, NcPoly, WordHash> cache_;
  std::size_t steps_ = 0;
};

NcPoly reduce(const NcPoly& f, const RewriteSystem& sys);

struct TraceStep {
  Word word;
  RewriteSite site;
};

struct TracedReduction {
  NcPoly normal_form;
  std::vector<TraceStep> trace;
};

/// Reduction by the global loop (repeatedly rewrite the largest reducible
/// word), recording every step. Slow; meant for tests and diagnostics.
TracedReduction reduce_traced(const NcPoly& f, const RewriteSystem& sys);

bool is_irreducible(const Word& w, const RewriteSystem& sys);

struct Ambiguity {
  enum class Kind { Overlap, Inclusion };
  Kind kind = Kind::Overlap;
  std::size_t rule_left = 0;
  std::size_t rule_right = 0;
  Word witness;
  /// Positions of the two rule leads inside the witness.
  std::size_t pos_left = 0;
  std::size_t pos_right = 0;
};

/// All overlap and inclusion ambiguities with witness degree in
/// [min_degree, max_degree], sorted by (degree, witness, kind, rules).
std::vector<Ambiguity> find_ambiguities(const RewriteSystem& sys, int max_degree, int min_degree = 0);

/// (witness rewritten at the left site) - (witness rewritten at the right
/// site), both fully reduced.
NcPoly resolve_ambiguity(const Ambiguity& amb, const RewriteSystem& sys, Reducer& reducer);
NcPoly resolve_ambiguity(const Ambiguity& amb, const RewriteSystem& sys);

/// Resolves a batch over a fixed system using up to `jobs` threads. Output
/// order matches input order.
std::vector<NcPoly> resolve_all(const std::vector<Ambiguity>& ambs, const RewriteSystem& sys, unsigned jobs = 1);

struct CompletionOptions {
  std::size_t max_new_rules = 200;
  unsigned jobs = 1;
};

struct CompletionResult {
  RewriteSystem system;
  /// New rules in discovery order (as first added, before interreduction).
  std::vector<RewriteRule> added;
  /// Rules removed by interreduction, by label.
  std::vector<std::string> removed;
  std::vector<std::string> log;
};

/// Throws BudgetExceeded (with the partial log in its message) when more
/// than max_new_rules rules would be added.
CompletionResult complete(const RewriteSystem& sys, int max_degree, const CompletionOptions& options = {});

/// Words of total degree `degree` containing no rule lead, increasing.
std::vector<Word> irreducible_words(const RewriteSystem& sys, int degree);
std::vector<Word> irreducible_words(const RewriteSystem& sys, Bidegree bidegree);
/// Counts of irreducible words by bidegree for total degrees 0..bound.
std::vector<std::vector<long>> irreducible_counts_bigraded(const RewriteSystem& sys, int bound);

std::string describe(const Ambiguity& amb, const RewriteSystem& sys);

}  // namespace ncalg
