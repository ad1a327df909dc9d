#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncalg/groebner.hpp"
#include "ncalg/presentation.hpp"

namespace ncalg {

struct HomomorphismCheck {
  bool pass = false;
  /// "label: normal form" for each relation whose image does not reduce to 0.
  std::vector<std::string> failures;
};

/// Algebra map given by generator images (elements over the target's
/// alphabet). PASS iff every source relation maps into the target's ideal.
HomomorphismCheck verify_homomorphism(const Presentation& source, const Presentation& target,
                                      const std::vector<NcPoly>& images, const CompletionOptions& options = {});

/// A linear generator map source -> target. For a twist claim the source is
/// graded_twist(base, twist_weights) and diag(twist_weights) must also be an
/// automorphism of base.
struct MorphismClaim {
  std::string tag;
  std::string kind;  // twist, opposite, iso, auto
  std::string description;
  Presentation source;
  Presentation target;
  LinearMap map;
  std::optional<Presentation> twist_base;
  std::vector<Scalar> twist_weights;
};

struct MorphismReport {
  std::string tag;
  bool pass = false;
  bool preserves_bigrading = false;
  Scalar determinant;
  HomomorphismCheck forward;
  HomomorphismCheck inverse;
  /// Twist claims: diag(weights) is an automorphism of the base.
  std::optional<HomomorphismCheck> twist_automorphism;
  std::string message;
};

/// Forward map, nonzero determinant, then the inverse map target -> source.
MorphismReport verify_morphism(const MorphismClaim& claim, const CompletionOptions& options = {});

/// Builds the claims listed in a claims file (see data/claims.json).
std::vector<MorphismClaim> load_claims(const std::string& path);
std::vector<MorphismClaim> catalog_claims();

/// One report per claim, in file order.
std::vector<MorphismReport> verify_catalog_isomorphisms(const CompletionOptions& options = {});

/// Isomorphism given by mutually inverse algebra maps phi: P -> Q and
/// psi: Q -> P on generators (images may have any degree).
struct InverseMapsReport {
  bool pass = false;
  HomomorphismCheck forward;
  HomomorphismCheck backward;
  /// Generators g with psi(phi(g)) != g in P or phi(psi(g)) != g in Q.
  std::vector<std::string> composite_failures;
};
InverseMapsReport verify_inverse_maps(const Presentation& p, const Presentation& q, const std::vector<NcPoly>& phi,
                                      const std::vector<NcPoly>& psi, const CompletionOptions& options = {});

/// Iterated Ore extension structure of a family.
struct OreClaim {
  std::string family;
  std::map<std::string, std::string> params;
  Presentation ore;
  Presentation target;
  std::vector<NcPoly> phi;  // ore -> target
  std::vector<NcPoly> psi;  // target -> ore
};
/// A(b,q) = B[x2; sigma, delta] with B on (x1, y, x3), and H(b) = B[x2; sigma, delta]
/// with B = k<x1, x3>/(r3, r4).
std::vector<OreClaim> ore_claims();

/// Generator map shapes for the morphism search; unknown entries are fresh
/// symbols.
enum class MapShape {
  Diagonal,      // x_i -> u_i x_i
  Trivial,       // x1 -> l x1, x2 -> l x2, x3 -> m x3
  QuasiTrivial,  // x1 -> l x2, x2 -> r x1, x3 -> m x3
  Bigraded,      // 2x2 block on x1, x2 and x3 -> m x3
  General,       // any 3x3 matrix
};
std::string to_string(MapShape shape);

struct MorphismSystem {
  std::vector<SymbolId> unknowns;
  LinearMap map;
  /// Coefficients of the reduced relation images, plus the minimal
  /// polynomials of algebraic constants.
  std::vector<ParamPoly> equations;
  ParamPoly determinant;
};

/// Both presentations need numeric coefficients over the same generators.
MorphismSystem morphism_system(const Presentation& source, const Presentation& target, MapShape shape);

struct MorphismSearch {
  enum class Verdict { Exists, None, Unknown };
  Verdict verdict = Verdict::Unknown;
  MorphismSystem system;
  /// Saturated ideal (by the determinant) when it is proper.
  std::vector<ParamPoly> basis;
  std::string diagnostics;
};

/// Exists iff the saturated ideal is proper, i.e. a graded isomorphism of
/// the shape exists over the algebraic closure.
MorphismSearch search_morphisms(const Presentation& source, const Presentation& target, MapShape shape,
                                const BuchbergerOptions& options = {});

/// Parameters read from r1 = x2x1 - p x1x2 - m x1^2 and
/// r2 = x3x2 - a x3x1 - n x1x3 - b x2x3 (monic forms).
struct GenericityReport {
  bool generic = false;
  bool jordan = false;  // m != 0 (family H)
  Scalar p, m, a, b;
  std::string message;
};
GenericityReport genericity(const Presentation& pres);

enum class AutSignature { T, TxZ2, Unknown };
std::string to_string(AutSignature s);

struct SignatureReport {
  AutSignature signature = AutSignature::Unknown;
  MorphismSearch trivial;
  MorphismSearch quasi_trivial;
  std::string message;
};

/// Throws InputError at non-generic parameters.
SignatureReport autgroup_signature(const Presentation& pres, const BuchbergerOptions& options = {});

/// Numeric spot check of the graded-map shapes: with a general 3x3 map, each listed
/// condition (entries outside the trivial and quasi-trivial shapes vanish)
/// holds on every solution, certified by Rabinowitsch saturation. A Jordan
/// source (family H) must also have a12 = a21 = 0.
struct ShapeCheck {
  bool pass = false;
  bool any_solution = false;
  std::vector<std::pair<std::string, bool>> conditions;
  std::string message;
};
ShapeCheck graded_map_shape_check(const Presentation& source, const Presentation& target, const BuchbergerOptions& options = {});

}  // namespace ncalg
