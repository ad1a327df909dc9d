#include "ncalg/resolution.hpp"

#include <map>

#include "ncalg/errors.hpp"
#include "ncalg/linsolve.hpp"

namespace ncalg {

NcMatrix make_matrix(std::vector<std::vector<NcPoly>> entries, std::vector<int> row_shifts,
                     std::vector<int> col_shifts, const Alphabet& alphabet) {
  if (entries.size() != row_shifts.size()) throw InputError("matrix has " + std::to_string(entries.size()) +
                                                            " rows but " + std::to_string(row_shifts.size()) + " row shifts");
  for (auto& row : entries)
    if (row.size() != col_shifts.size())
      throw InputError("matrix row has " + std::to_string(row.size()) + " entries but " +
                       std::to_string(col_shifts.size()) + " column shifts");
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < col_shifts.size(); ++j) {
      const NcPoly& e = entries[i][j];
      if (e.is_zero()) continue;
      int want = col_shifts[j] - row_shifts[i];
      if (!e.is_bihomogeneous(alphabet))
        throw InputError("matrix entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is not bihomogeneous");
      for (auto& [w, c] : e.terms())
        if (w.degree != want)
          throw InputError("matrix entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") has degree " +
                           std::to_string(w.degree) + ", expected " + std::to_string(want));
    }
  return {std::move(entries), std::move(row_shifts), std::move(col_shifts)};
}

NcMatrix parse_matrix(const std::vector<std::vector<std::string>>& entries, std::vector<int> row_shifts,
                      std::vector<int> col_shifts, const Presentation& pres) {
  std::vector<std::vector<NcPoly>> m;
  for (auto& row : entries) {
    m.emplace_back();
    for (auto& text : row) m.back().push_back(pres.parse(text));
  }
  return make_matrix(std::move(m), std::move(row_shifts), std::move(col_shifts), pres.alphabet);
}

NcMatrix multiply(const NcMatrix& m, const NcMatrix& n) {
  if (m.cols() != n.rows()) throw InputError("matrix product size mismatch");
  if (m.col_shifts != n.row_shifts) throw InputError("matrix product shift mismatch");
  NcMatrix out;
  out.row_shifts = m.row_shifts;
  out.col_shifts = n.col_shifts;
  out.entries.assign(m.rows(), std::vector<NcPoly>(n.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < n.cols(); ++k)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m.at(i, j).is_zero() && !n.at(j, k).is_zero()) out.entries[i][k] += m.at(i, j) * n.at(j, k);
  return out;
}

std::vector<std::vector<int>> FreeComplex::euler_shifts() const {
  std::vector<std::vector<int>> out;
  if (maps.empty()) return out;
  // F0 is the target of the last map; walk back to the source of maps[0].
  for (std::size_t i = maps.size(); i-- > 0;) {
    if (out.empty()) {
      std::vector<int> f0;
      for (int s : maps[i].col_shifts) f0.push_back(-s);
      out.push_back(f0);
    }
    std::vector<int> f;
    for (int s : maps[i].row_shifts) f.push_back(-s);
    out.push_back(f);
  }
  return out;
}

namespace {

std::vector<std::vector<NcPoly>> generator_column(const Alphabet& al, bool column) {
  std::vector<std::vector<NcPoly>> m;
  for (const char* name : {"x1", "x2", "x3"}) {
    int idx = al.index_of(name);
    if (idx < 0) throw InputError(std::string("standard complex needs generator ") + name);
    NcPoly x(al.letter(static_cast<std::size_t>(idx)));
    if (column) m.push_back({x});
    else {
      if (m.empty()) m.emplace_back();
      m[0].push_back(x);
    }
  }
  return m;
}

const std::vector<int> kF3 = {-4, -4, -4};
const std::vector<int> kF2 = {-2, -2, -3, -3};
const std::vector<int> kF1 = {-1, -1, -1};

}  // namespace

FreeComplex build_standard_complex(const Presentation& pres, const NcMatrix& d3, const NcMatrix& d2) {
  if (d3.rows() != 3 || d3.cols() != 4) throw InputError("d3 must be 3x4");
  if (d2.rows() != 4 || d2.cols() != 3) throw InputError("d2 must be 4x3");
  if (d3.row_shifts != kF3 || d3.col_shifts != kF2) throw InputError("d3 shifts must be (-4,-4,-4) -> (-2,-2,-3,-3)");
  if (d2.row_shifts != kF2 || d2.col_shifts != kF1) throw InputError("d2 shifts must be (-2,-2,-3,-3) -> (-1,-1,-1)");
  FreeComplex cx;
  cx.maps.push_back(make_matrix(generator_column(pres.alphabet, false), {-5}, kF3, pres.alphabet));
  cx.maps.push_back(d3);
  cx.maps.push_back(d2);
  cx.maps.push_back(make_matrix(generator_column(pres.alphabet, true), kF1, {0}, pres.alphabet));
  return cx;
}

FreeComplex build_standard_complex(const Presentation& pres, const std::vector<std::vector<std::string>>& d3,
                                   const std::vector<std::vector<std::string>>& d2) {
  if (d3.size() != 3 || d3[0].size() != 4) throw InputError("d3 must be 3x4");
  if (d2.size() != 4 || d2[0].size() != 3) throw InputError("d2 must be 4x3");
  return build_standard_complex(pres, parse_matrix(d3, kF3, kF2, pres), parse_matrix(d2, kF2, kF1, pres));
}

ComplexReport verify_complex(const FreeComplex& cx, const Presentation& pres, const CompletionOptions& options) {
  ComplexReport rep;
  std::vector<NcMatrix> products;
  int maxdeg = 0;
  for (std::size_t i = 0; i + 1 < cx.maps.size(); ++i) {
    products.push_back(multiply(cx.maps[i], cx.maps[i + 1]));
    for (auto& row : products.back().entries)
      for (auto& e : row) maxdeg = std::max(maxdeg, e.degree());
  }
  auto done = complete(pres, maxdeg + 1, options);
  for (auto& c : done.system.side_conditions) rep.side_conditions.push_back(c.to_string());
  Reducer red(done.system);
  for (std::size_t p = 0; p < products.size(); ++p) {
    const NcMatrix& m = products[p];
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t k = 0; k < m.cols(); ++k) {
        NcPoly r = red.reduce(m.at(i, k));
        if (!r.is_zero()) {
          std::size_t d = cx.maps.size() - p;
          rep.failures.push_back("d" + std::to_string(d) + "*d" + std::to_string(d - 1) + " entry (" +
                                 std::to_string(i + 1) + "," + std::to_string(k + 1) + ") = " + r.to_string(pres.alphabet));
        }
      }
  }
  rep.pass = rep.failures.empty();
  return rep;
}

namespace {

// c with e = c * w, or nullopt.
std::optional<Scalar> multiple_of(const NcPoly& e, const Word& w) {
  if (e.is_zero()) return Scalar(0L);
  if (e.size() != 1 || e.leading_word() != w) return std::nullopt;
  return e.leading_coefficient();
}

}  // namespace

ResolutionShapeReport verify_resolution_shape(const FreeComplex& cx, const Presentation& pres) {
  ResolutionShapeReport rep;
  if (cx.maps.size() != 4 || cx.maps[1].rows() != 3 || cx.maps[1].cols() != 4) {
    rep.message = "not a standard complex";
    return rep;
  }
  const NcMatrix& d3 = cx.maps[1];
  const Alphabet& al = pres.alphabet;
  int i1 = al.index_of("x1"), i3 = al.index_of("x3");
  Word x3 = al.letter(static_cast<std::size_t>(i3));
  Word x3x3 = x3 * x3;
  Word x3x1 = x3 * al.letter(static_cast<std::size_t>(i1));
  auto a = multiple_of(d3.at(0, 0), x3x3);
  auto f = multiple_of(d3.at(1, 0), x3x3);
  auto b = multiple_of(d3.at(0, 3), x3);
  auto fp = multiple_of(d3.at(1, 3), x3);
  if (!a || !f) {
    rep.message = "column 1 entries 1-2 are not scalar multiples of x3^2";
    return rep;
  }
  if (!b || !fp) {
    rep.message = "column 4 entries 1-2 are not scalar multiples of x3";
    return rep;
  }
  rep.alpha = *a;
  rep.phi = *f;
  rep.beta = *b;
  rep.phi_prime = *fp;
  const NcPoly& e31 = d3.at(2, 0);
  rep.c = -e31.coefficient(x3x1);
  if (rep.c.is_zero()) {
    rep.message = "entry (3,1) has no x3*x1 term";
    return rep;
  }
  for (auto& [w, c] : e31.terms()) {
    if (w == x3x1) continue;
    if (w.size() != 2 || w.at(1) != static_cast<std::uint8_t>(i3) || al[w.at(0)].degree() != 1) {
      rep.message = "entry (3,1) has a term " + al.to_string(w) + " outside k x3x1 + A_1 x3";
      return rep;
    }
    rep.y += NcPoly(al.letter(w.at(0)), c);
  }
  rep.determinant = rep.alpha * rep.phi_prime - rep.beta * rep.phi;
  if (rep.determinant.is_zero()) {
    rep.message = "alpha*phi' - beta*phi = 0";
    return rep;
  }
  rep.pass = true;
  rep.message = "alpha=" + rep.alpha.to_string() + " phi=" + rep.phi.to_string() + " beta=" + rep.beta.to_string() +
                " phi'=" + rep.phi_prime.to_string() + " det=" + rep.determinant.to_string() +
                " y=" + (rep.y.is_zero() ? std::string("0") : rep.y.to_string(al)) +
                (rep.c.is_one() ? std::string() : " c=" + rep.c.to_string());
  return rep;
}

TranscriptionReport check_transcription(const FreeComplex& cx, const Presentation& pres) {
  TranscriptionReport rep;
  if (cx.maps.size() < 2) {
    rep.message = "complex too short";
    return rep;
  }
  NcMatrix prod = multiply(cx.maps[cx.maps.size() - 2], cx.maps.back());
  std::vector<bool> used(pres.relations.size(), false);
  rep.pass = true;
  for (std::size_t i = 0; i < prod.rows(); ++i) {
    const NcPoly& row = prod.at(i, 0);
    std::optional<std::pair<std::size_t, Scalar>> hit;
    for (std::size_t k = 0; k < pres.relations.size() && !row.is_zero(); ++k) {
      const NcPoly& r = pres.relations[k];
      if (used[k] || r.leading_word() != row.leading_word()) continue;
      Scalar s = row.leading_coefficient() / r.leading_coefficient();
      if (row == r.scaled(s)) {
        hit = std::make_pair(k, s);
        used[k] = true;
        break;
      }
    }
    if (!hit) {
      rep.pass = false;
      rep.message += "row " + std::to_string(i + 1) + " of d2*d1 matches no relation; ";
    } else {
      rep.message += "row " + std::to_string(i + 1) + " = " + hit->second.to_string() + " * " + pres.label(hit->first) + "; ";
    }
    rep.matches.push_back(hit);
  }
  if (rep.message.size() >= 2 && rep.message.ends_with("; ")) rep.message.resize(rep.message.size() - 2);
  return rep;
}

NonzerodivisorReport right_nonzerodivisor_check(const Presentation& pres, std::size_t generator, int bound,
                                                const CompletionOptions& options) {
  NonzerodivisorReport rep;
  rep.bound = bound;
  const Alphabet& al = pres.alphabet;
  auto done = complete(pres, bound, options);
  Reducer red(done.system);
  Word x = al.letter(generator);
  for (int d = 0; d + x.degree <= bound; ++d) {
    for (int a = 0; a <= d; ++a) {
      auto words = irreducible_words(done.system, Bidegree{a, d - a});
      if (words.empty()) continue;
      std::map<Word, std::size_t> index;
      std::vector<NcPoly> images;
      for (auto& w : words) {
        images.push_back(red.reduce(NcPoly(w * x)));
        for (auto& [v, c] : images.back().terms()) index.emplace(v, 0);
      }
      std::size_t n = 0;
      for (auto& [v, i] : index) i = n++;
      ScalarMatrix m(n, std::vector<Scalar>(images.size()));
      for (std::size_t j = 0; j < images.size(); ++j)
        for (auto& [v, c] : images[j].terms()) m[index[v]][j] = c;
      if (matrix_rank(m) != images.size()) {
        rep.message = "right multiplication by " + al[generator].name + " has a kernel in bidegree (" +
                      std::to_string(a) + "," + std::to_string(d - a) + ")";
        return rep;
      }
    }
  }
  rep.pass = true;
  rep.message = "right multiplication by " + al[generator].name + " is injective through degree " +
                std::to_string(bound - x.degree);
  return rep;
}

}  // namespace ncalg
