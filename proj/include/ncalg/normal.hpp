#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncalg/linsolve.hpp"
#include "ncalg/presentation.hpp"

namespace ncalg {

/// g * z = sum_j left[g][j] z * x_j and z * g = sum_j right[g][j] x_j * z
/// for every generator g, after reduction.
struct NormalityWitness {
  NcPoly element;
  ScalarMatrix left;
  ScalarMatrix right;
  /// False when some z * x_j (or x_j * z) are linearly dependent, so the
  /// multipliers are one choice among several.
  bool unique = true;
  std::vector<ParamPoly> side_conditions;
};

struct NormalResult {
  std::optional<NormalityWitness> witness;
  /// Failing generator and side, with the residual, when not normal.
  std::string failure;
  bool normal() const { return witness.has_value(); }
};

/// Graded criterion g z in z A_1 and z g in A_1 z for every generator g.
/// This characterizes normality because the algebras are generated in degree 1.
NormalResult verify_normal(const NcPoly& z, const RewriteSystem& completed);
/// Completes the presentation through deg(z) + 2 first.
NormalResult verify_normal(const NcPoly& z, const Presentation& pres, const CompletionOptions& options = {});

bool verify_central(const NcPoly& z, const RewriteSystem& completed);
bool verify_central(const NcPoly& z, const Presentation& pres, const CompletionOptions& options = {});

struct FiniteDimResult {
  bool finite = false;
  /// All irreducible words when finite.
  std::vector<Word> basis;
  /// First degree from which no irreducible word exists.
  int vanishing_from = -1;
  std::vector<long> counts;
  std::string message;
};

/// Window criterion: if every word in degrees D .. D+w-1 is reducible
/// (w = max rule degree) then so is every longer word, because it has a
/// prefix whose degree lies in that window.
FiniteDimResult finite_dim_check(const Presentation& pres, int bound, const CompletionOptions& options = {});

/// One step of a normal-element chain: each element must be normal (or
/// central when `central` is set) in the quotient by all earlier steps.
struct ChainStep {
  std::vector<std::string> elements;
  bool central = false;
};

struct ChainReport {
  bool pass = false;
  std::vector<std::string> lines;
  FiniteDimResult terminal;
};

ChainReport verify_chain(const Presentation& pres, const std::vector<ChainStep>& steps, int finite_bound,
                         const CompletionOptions& options = {});

}  // namespace ncalg
