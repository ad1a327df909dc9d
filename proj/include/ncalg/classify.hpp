#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncalg/groebner.hpp"
#include "ncalg/presentation.hpp"

namespace ncalg {

/// Coefficient of one monomial in one overlap relation of a template.
struct SystemEntry {
  std::string relation;  // r6, r7, ...
  Word monomial;
  /// Exact coefficient in the template's field (q and z are 1/p and (a-m)/p).
  Scalar value;
  /// Numerator of `value`; the denominator is a power of p.
  ParamPoly poly;
};

struct CoefficientSystem {
  std::string case_id;
  Presentation tmpl;
  std::vector<SystemEntry> entries;
  /// Relations added to the rewriting system on the way (e.g. r8 for TK).
  std::vector<NcPoly> new_relations;
  std::vector<std::string> ties;
  std::vector<ParamPoly> nonvanishing;

  std::vector<ParamPoly> polynomials() const;
  /// Nullptr when the relation has no term on that monomial.
  const SystemEntry* find(const std::string& relation, const Word& monomial) const;
  std::vector<const SystemEntry*> relation(const std::string& relation) const;
};

/// Resolves the case's overlaps (TL, TJ, S32: r6 at x3^2x1x2, r7 at x3^2x1^2,
/// r8 at x3x1x2x1; TK: r6, r7 at x3x2x3x1, the new rule r8 at x3x1x2x1 and
/// r9 at x2x3x1x2; TH: r6 at x3x2^2x3; THzero: none) and collects their
/// coefficients.
CoefficientSystem overlap_system(const std::string& case_id);

struct GoldenLine {
  std::string relation;
  Word monomial;
  std::string expected_text;
  bool match = false;
  std::string computed;
};

struct DisplayedReport {
  bool pass = false;
  std::vector<GoldenLine> lines;
  /// Computed monomials with a nonzero coefficient absent from the golden data.
  std::vector<std::string> extra;
  /// Per relation, the sign (+1 or -1) relating the golden data to the
  /// computed resolution; a relation is only determined up to scale.
  std::map<std::string, int> sign;
};

/// Golden files hold "word: polynomial" lines in the symbols of the
/// template plus q and z.
DisplayedReport verify_displayed(const std::string& case_id, const std::string& data_dir = NCALG_DATA_DIR);

struct FamilySolveReport {
  bool pass = false;
  std::map<std::string, Scalar> assignment;
  /// "relation monomial: value" for entries that do not vanish.
  std::vector<std::string> nonzero;
  std::string message;
};

/// Reads the template coefficients off the family's monic relations r1-r4
/// and substitutes them into every polynomial of the system.
FamilySolveReport family_solves(const Presentation& family, const CoefficientSystem& system);
FamilySolveReport family_solves(const Presentation& family, const std::string& case_id);

struct NoSolutionReport {
  InconsistencyResult::Verdict verdict = InconsistencyResult::Verdict::Unknown;
  /// Constant coefficient found, as "relation monomial = value".
  std::string witness;
  std::string diagnostics;
  bool inconsistent() const { return verdict == InconsistencyResult::Verdict::Inconsistent; }
};

/// Substitutes the reductions into the system. Inconsistent if some
/// coefficient becomes a nonzero constant, or else if the saturated ideal
/// (with the template's and the extra nonvanishing conditions) contains 1.
NoSolutionReport no_solution_certificate(const CoefficientSystem& system, const std::map<std::string, Scalar>& reductions,
                                         const std::vector<std::string>& extra_nonvanishing = {},
                                         const BuchbergerOptions& options = {});

/// Non-domain argument for a relation that factors as u * x or x * u.
struct StructuralCertificate {
  bool pass = false;
  /// Coefficient of x3x1x3x1 in r6 and the conclusion drawn from it (TH).
  std::string forcing;
  std::string side;  // "left" (x1 * u) or "right" (u * x3)
  NcPoly factor;
  std::string message;
};

/// TH: r6 forces j = 0, after which r4 = u * x3 with u nonzero in A.
/// THzero: r4 = x1 * u with u nonzero in A when (f, g, j) != 0.
StructuralCertificate structural_certificate(const std::string& case_id);

/// Best-effort forward solving: reduced Groebner basis of the specialized
/// system saturated by the nonvanishing conditions. Throws BudgetExceeded.
std::vector<ParamPoly> solve_system(const CoefficientSystem& system, const std::map<std::string, Scalar>& reductions,
                                    const std::vector<std::string>& extra_nonvanishing = {},
                                    const BuchbergerOptions& options = {});

}  // namespace ncalg
