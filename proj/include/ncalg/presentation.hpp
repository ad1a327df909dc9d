#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncalg/rewrite.hpp"

namespace ncalg {

/// Generators, relations and coefficient data of a bigraded algebra.
struct Presentation {
  std::string name;
  Alphabet alphabet;
  std::vector<NcPoly> relations;
  std::vector<std::string> labels;
  /// Declared parameter symbols, in declaration order.
  std::vector<std::string> parameters;
  std::vector<AlgebraicConstraint> constraints;
  ConstraintsPtr ctx;
  /// Polynomials assumed nonzero (genericity conditions).
  std::vector<ParamPoly> nonvanishing;

  ScalarScope scope() const;
  /// Throws InputError on a non-bihomogeneous relation or an undeclared symbol.
  void validate() const;
  std::string label(std::size_t i) const;
  RewriteSystem system() const;
  std::vector<SymbolId> parameter_ids() const;
  NcPoly parse(std::string_view text) const;
  bool is_numeric() const;
};

/// Builds a presentation over the standard generators x1, x2 of bidegree
/// (1,0) and x3 of bidegree (0,1), parsing each relation text.
Presentation make_presentation(std::string name, const std::vector<std::string>& relations,
                               const std::vector<std::string>& parameters,
                               const std::vector<std::pair<std::string, std::string>>& constraints = {},
                               const std::vector<std::string>& nonvanishing = {});

/// Same, over an arbitrary alphabet.
Presentation make_presentation(std::string name, const Alphabet& alphabet, const std::vector<std::string>& relations,
                               const std::vector<std::string>& parameters,
                               const std::vector<std::pair<std::string, std::string>>& constraints = {},
                               const std::vector<std::string>& nonvanishing = {});

Alphabet standard_alphabet();

/// The opposite algebra: every relation word reversed.
Presentation opposite(const Presentation& p);

/// Substitutes parameter values (simultaneously). Substituted parameters are
/// dropped from the declaration. Throws InputError if a nonvanishing
/// condition becomes identically zero, and PoleError on a pole.
Presentation substitute(const Presentation& p, const std::map<std::string, Scalar>& values);

/// Substitutes parameter values into the coefficients of an element
/// written over `p`, with the same checks as substitute(Presentation).
NcPoly substitute(const NcPoly& f, const Presentation& p, const std::map<std::string, Scalar>& values);

/// Relations transformed by the linear substitution x_i -> sum_j m_ij x_j.
Presentation change_variables(const Presentation& p, const LinearMap& m);

/// Appends elements as relations; their labels are q1, q2, ...
Presentation quotient(const Presentation& p, const std::vector<NcPoly>& elements);

/// Completed rewriting system of the presentation through `degree`.
CompletionResult complete(const Presentation& p, int degree, const CompletionOptions& options = {});

/// True if both presentations have the same relations, each up to a nonzero
/// scalar, in the same order.
bool same_relations(const Presentation& a, const Presentation& b);

}  // namespace ncalg
