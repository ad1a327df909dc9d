#include "ncalg/normal.hpp"

#include <algorithm>
#include <map>

#include "ncalg/errors.hpp"

namespace ncalg {

namespace {

// Coordinates of the targets over the union of their words, then solves
// target = sum_j lambda_j basis_j.
struct SpanCheck {
  bool ok = false;
  std::vector<Scalar> lambda;
  bool unique = true;
  std::vector<ParamPoly> conditions;
  std::string residual;
};

SpanCheck in_span(const NcPoly& target, const std::vector<NcPoly>& basis, const Alphabet& alphabet) {
  std::map<Word, std::size_t> index;
  for (auto& b : basis)
    for (auto& [w, c] : b.terms()) index.emplace(w, 0);
  for (auto& [w, c] : target.terms()) index.emplace(w, 0);
  std::size_t n = 0;
  for (auto& [w, i] : index) i = n++;
  ScalarMatrix a(n, std::vector<Scalar>(basis.size()));
  std::vector<Scalar> rhs(n);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (auto& [w, c] : basis[j].terms()) a[index[w]][j] = c;
  for (auto& [w, c] : target.terms()) rhs[index[w]] = c;
  SpanCheck out;
  LinearSolution sol = solve_linear(a, rhs);
  out.conditions = sol.pivot_conditions;
  if (!sol.consistent) {
    out.residual = "no solution for " + target.to_string(alphabet);
    return out;
  }
  out.ok = true;
  out.lambda = sol.x;
  out.unique = sol.rank == basis.size();
  return out;
}

}  // namespace

NormalResult verify_normal(const NcPoly& z, const RewriteSystem& completed) {
  NormalResult res;
  const Alphabet& al = completed.alphabet;
  Reducer red(completed);
  NcPoly zr = red.reduce(z);
  if (zr.is_zero()) {
    res.failure = "element is zero in the algebra";
    return res;
  }
  if (!z.is_bihomogeneous(al)) {
    res.failure = "element is not bihomogeneous";
    return res;
  }
  std::size_t n = al.size();
  std::vector<NcPoly> zx, xz;
  for (std::size_t j = 0; j < n; ++j) {
    NcPoly x(al.letter(j));
    zx.push_back(red.reduce(zr * x));
    xz.push_back(red.reduce(x * zr));
  }
  NormalityWitness wit;
  wit.element = z;
  wit.left.assign(n, std::vector<Scalar>(n));
  wit.right.assign(n, std::vector<Scalar>(n));
  for (std::size_t g = 0; g < n; ++g) {
    for (int side = 0; side < 2; ++side) {
      const NcPoly& target = side == 0 ? xz[g] : zx[g];
      const std::vector<NcPoly>& basis = side == 0 ? zx : xz;
      SpanCheck sc = in_span(target, basis, al);
      if (!sc.ok) {
        res.failure = (side == 0 ? al[g].name + " * z is not in z * A_1: " : "z * " + al[g].name + " is not in A_1 * z: ") +
                      sc.residual;
        return res;
      }
      (side == 0 ? wit.left : wit.right)[g] = sc.lambda;
      wit.unique = wit.unique && sc.unique;
      for (auto& c : sc.conditions)
        if (std::find(wit.side_conditions.begin(), wit.side_conditions.end(), c) == wit.side_conditions.end())
          wit.side_conditions.push_back(c);
    }
  }
  res.witness = std::move(wit);
  return res;
}

NormalResult verify_normal(const NcPoly& z, const Presentation& pres, const CompletionOptions& options) {
  if (z.is_zero()) return {std::nullopt, "element is zero"};
  auto done = complete(pres, z.leading_word().degree + 2, options);
  return verify_normal(z, done.system);
}

bool verify_central(const NcPoly& z, const RewriteSystem& completed) {
  Reducer red(completed);
  for (std::size_t g = 0; g < completed.alphabet.size(); ++g) {
    NcPoly x(completed.alphabet.letter(g));
    if (!red.reduce(x * z - z * x).is_zero()) return false;
  }
  return true;
}

bool verify_central(const NcPoly& z, const Presentation& pres, const CompletionOptions& options) {
  if (z.is_zero()) return true;
  auto done = complete(pres, z.leading_word().degree + 2, options);
  return verify_central(z, done.system);
}

FiniteDimResult finite_dim_check(const Presentation& pres, int bound, const CompletionOptions& options) {
  FiniteDimResult out;
  int maxrel = 0;
  for (auto& r : pres.relations) maxrel = std::max(maxrel, r.leading_word().degree);
  if (bound < 2 * maxrel) throw InputError("finite_dim_check needs bound >= 2 * max relation degree");
  CompletionResult done;
  try {
    done = complete(pres, bound, options);
  } catch (const BudgetExceeded& e) {
    out.message = std::string("completion budget exceeded: ") + e.what();
    return out;
  }
  int w = std::max(1, done.system.max_rule_degree());
  for (int d = 0; d <= bound; ++d) out.counts.push_back(static_cast<long>(irreducible_words(done.system, d).size()));
  for (int d = 0; d + w - 1 <= bound; ++d) {
    bool empty = true;
    for (int k = d; k < d + w; ++k) empty = empty && out.counts[static_cast<std::size_t>(k)] == 0;
    if (!empty) continue;
    out.finite = true;
    out.vanishing_from = d;
    for (int k = 0; k < d; ++k)
      for (auto& word : irreducible_words(done.system, k)) out.basis.push_back(word);
    out.message = "no irreducible words in degrees " + std::to_string(d) + ".." + std::to_string(d + w - 1) +
                  "; dimension " + std::to_string(out.basis.size());
    return out;
  }
  out.message = "irreducible words remain within the bound " + std::to_string(bound);
  return out;
}

ChainReport verify_chain(const Presentation& pres, const std::vector<ChainStep>& steps, int finite_bound,
                         const CompletionOptions& options) {
  ChainReport rep;
  rep.pass = true;
  Presentation cur = pres;
  for (std::size_t s = 0; s < steps.size(); ++s) {
    std::vector<NcPoly> elems;
    for (auto& text : steps[s].elements) {
      NcPoly z = cur.parse(text);
      elems.push_back(z);
      int deg = z.leading_word().degree;
      auto done = complete(cur, deg + 2, options);
      bool ok;
      std::string what;
      if (steps[s].central) {
        ok = verify_central(z, done.system);
        what = ok ? "central" : "not central";
      } else {
        auto nr = verify_normal(z, done.system);
        ok = nr.normal();
        what = ok ? "normal" : "not normal (" + nr.failure + ")";
      }
      rep.lines.push_back("step " + std::to_string(s + 1) + ": " + text + " is " + what + " in " + cur.name);
      rep.pass = rep.pass && ok;
    }
    cur = quotient(cur, elems);
    cur.name = pres.name + "/step" + std::to_string(s + 1);
  }
  rep.terminal = finite_dim_check(cur, finite_bound, options);
  rep.lines.push_back("terminal quotient: " + std::string(rep.terminal.finite ? "finite dimensional, " : "not shown finite, ") +
                      rep.terminal.message);
  rep.pass = rep.pass && rep.terminal.finite;
  return rep;
}

}  // namespace ncalg
