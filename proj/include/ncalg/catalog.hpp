#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncalg/groebner.hpp"
#include "ncalg/normal.hpp"
#include "ncalg/presentation.hpp"

namespace ncalg {

/// Family ids: A B C D E F Fu G H (Fu is the underlined F). Template ids:
/// TL TK TH THzero TJ S32.
std::vector<std::string> family_ids();
std::vector<std::string> template_ids();
bool is_family(const std::string& id);
bool is_template(const std::string& id);

/// Parameter names of a family in declaration order, e.g. {"b", "q"} for A.
std::vector<std::string> family_parameters(const std::string& id);

/// The family's presentation with the given parameters substituted; the
/// rest stay symbolic. Algebraic constants (gamma) are declared with their
/// minimal polynomials. Throws InputError on an unknown id or a parameter
/// that violates a nonvanishing condition.
Presentation family(const std::string& id, const std::map<std::string, Scalar>& params = {});

/// Convenience: parameters parsed from expression strings.
Presentation family_from_strings(const std::string& id, const std::map<std::string, std::string>& params);

/// An element written in the family's symbols (e.g. "x3*x1 - q^2*b*x1*x3"),
/// specialized to the parameters as family() would.
NcPoly family_element(const std::string& id, std::string_view text, const std::map<std::string, std::string>& params = {});

/// Relation templates with free coefficients of the classification. The
/// coefficients q and z are the field elements 1/p and (a - m)/p, so the
/// ties pq = 1 and z = qa - qm hold identically.
Presentation relation_template(const std::string& id);

/// Twist by the diagonal automorphism x_i -> w_i x_i: each word
/// x_{i1} ... x_{in} of a relation gets the factor prod_j w_{ij}^(-m_j),
/// where m_j is the degree of the prefix before letter j.
Presentation graded_twist(const Presentation& pres, const std::vector<Scalar>& weights);

/// Appends `new_gen` and the relations new_gen g = sigma(g) new_gen + delta(g)
/// for every base generator g. sigma is a linear map on the base generators.
Presentation ore_extension(const Presentation& base, const LinearMap& sigma, const std::vector<NcPoly>& delta,
                           const Generator& new_gen);

struct Degree1NormalResult {
  enum class Verdict { Found, None, Unknown };
  Verdict verdict = Verdict::Unknown;
  /// Normal elements up to scale: one per isolated solution, and the chart
  /// point (free coordinates zero) of a positive-dimensional chart when it is
  /// itself a solution.
  std::vector<NcPoly> elements;
  /// Chart descriptions whose solution set is positive dimensional.
  std::vector<std::string> families;
  std::string diagnostics;
};

/// Solves for z = a x1 + b x2 + c x3 with x_i z = sum_j L_ij z x_j and
/// z x_i = sum_j R_ij x_j z, in the three projective charts of (a, b, c).
/// Requires numeric coefficients; algebraic constants are added to the
/// Groebner system through their minimal polynomials.
Degree1NormalResult degree1_normal_search(const Presentation& pres, const BuchbergerOptions& options = {});

/// Normal-element facts stated for a family, as element strings.
struct NormalClaim {
  std::string tag;
  std::string family;
  std::map<std::string, std::string> params;
  std::string element;
};
std::vector<NormalClaim> normal_claims();

/// Normal-element chain ending in a finite-dimensional quotient.
struct ChainClaim {
  std::string tag;
  std::string family;
  std::map<std::string, std::string> params;
  std::vector<ChainStep> steps;
  int finite_bound = 10;
  std::optional<std::size_t> expected_dimension;
};
std::vector<ChainClaim> chain_claims();

/// Resolution matrices d3 (3x4) and d2 (4x3) as entry strings.
struct ResolutionData {
  std::string family;
  std::map<std::string, std::string> params;
  std::vector<std::vector<std::string>> d3;
  std::vector<std::vector<std::string>> d2;
};
std::vector<ResolutionData> resolution_data();

}  // namespace ncalg
