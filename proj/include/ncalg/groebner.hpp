#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ncalg/param_poly.hpp"

namespace ncalg {

/// Reduced Groebner basis under grevlex on an explicit symbol list (earlier
/// symbols are larger variables). Coefficients are rationals.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(std::vector<SymbolId> symbols, std::vector<ParamPoly> basis)
      : symbols_(std::move(symbols)), basis_(std::move(basis)) {}

  const std::vector<SymbolId>& symbols() const { return symbols_; }
  /// Monic, sorted by increasing leading monomial.
  const std::vector<ParamPoly>& basis() const { return basis_; }
  bool is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }

  ParamPoly normal_form(const ParamPoly& f) const;
  bool contains(const ParamPoly& f) const { return normal_form(f).is_zero(); }

 private:
  std::vector<SymbolId> symbols_;
  std::vector<ParamPoly> basis_;
};

struct BuchbergerOptions {
  std::size_t max_pair_reductions = 50000;
};

/// Buchberger's algorithm with the product and chain criteria. `symbols`
/// must list every symbol occurring in `generators`; their order fixes the
/// grevlex order. Throws BudgetExceeded when the pair budget runs out and
/// InputError on an empty generator list or undeclared symbol.
GroebnerBasis buchberger(const std::vector<ParamPoly>& generators, const std::vector<SymbolId>& symbols,
                         const BuchbergerOptions& options = {});

struct InconsistencyResult {
  enum class Verdict { Inconsistent, Unknown };
  Verdict verdict = Verdict::Unknown;
  /// Basis of the saturated ideal when computed ({1} when Inconsistent).
  std::vector<ParamPoly> basis;
  std::string diagnostics;
  bool inconsistent() const { return verdict == Verdict::Inconsistent; }
};

/// Decides whether the system has no common zero with every `nonvanishing`
/// polynomial nonzero, via Rabinowitsch saturation. Unknown means either the
/// budget ran out or the saturated ideal is proper (consistency is never
/// claimed); diagnostics distinguish the two.
InconsistencyResult inconsistency_certificate(const std::vector<ParamPoly>& system,
                                              const std::vector<ParamPoly>& nonvanishing,
                                              const BuchbergerOptions& options = {});

/// Collects the symbols of a list of polynomials in id order.
std::vector<SymbolId> collect_symbols(const std::vector<ParamPoly>& polys);

}  // namespace ncalg
