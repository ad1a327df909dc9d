#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncalg/scalar.hpp"
#include "ncalg/word.hpp"

namespace ncalg {

/// Element of the free algebra: a finite combination of words with Scalar
/// coefficients, kept in strictly descending word order with no zero terms.
class NcPoly {
 public:
  using Term = std::pair<Word, Scalar>;

  NcPoly() = default;
  explicit NcPoly(const Word& w, const Scalar& c = Scalar(1L));
  static NcPoly constant(const Scalar& c) { return NcPoly(Word{}, c); }
  /// Combines duplicate words and drops zero coefficients.
  static NcPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Word& leading_word() const { return terms_.front().first; }
  const Scalar& leading_coefficient() const { return terms_.front().second; }
  /// Coefficient of `w` (zero if absent).
  Scalar coefficient(const Word& w) const;
  /// Bidegree shared by all terms, or nullopt if the terms differ (or zero).
  std::optional<Bidegree> bidegree(const Alphabet& alphabet) const;
  bool is_bihomogeneous(const Alphabet& alphabet) const;
  /// Largest total degree among the terms (0 for zero).
  int degree() const { return terms_.empty() ? 0 : terms_.front().first.degree; }

  NcPoly operator-() const;
  NcPoly operator+(const NcPoly& o) const;
  NcPoly operator-(const NcPoly& o) const;
  NcPoly operator*(const NcPoly& o) const;
  NcPoly& operator+=(const NcPoly& o) { return *this = *this + o; }
  NcPoly& operator-=(const NcPoly& o) { return *this = *this - o; }
  NcPoly& operator*=(const NcPoly& o) { return *this = *this * o; }
  NcPoly scaled(const Scalar& c) const;
  NcPoly left_mul(const Word& w) const;
  NcPoly right_mul(const Word& w) const;

  /// Applies `f` to every coefficient (e.g. parameter substitution).
  template <class F>
  NcPoly map_coefficients(F&& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& [w, c] : terms_) out.emplace_back(w, f(c));
    return from_terms(std::move(out));
  }

  bool operator==(const NcPoly& o) const;
  bool operator!=(const NcPoly& o) const { return !(*this == o); }

  std::string to_string(const Alphabet& alphabet) const;

 private:
  std::vector<Term> terms_;
};

/// Square matrix acting on the generator list: row i is the image of
/// generator i as a combination of generators.
struct LinearMap {
  std::vector<std::vector<Scalar>> matrix;

  static LinearMap identity(std::size_t n);
  static LinearMap diagonal(const std::vector<Scalar>& entries);
  std::size_t size() const { return matrix.size(); }
  Scalar determinant() const;
  /// Throws DivisionByZero when singular.
  LinearMap inverse() const;
  LinearMap compose(const LinearMap& then) const;  // apply this, then `then`
  /// True when no entry links generators of different bidegree.
  bool preserves_bigrading(const Alphabet& alphabet) const;
  std::vector<NcPoly> images(const Alphabet& alphabet) const;
};

/// Algebra endomorphism of the free algebra given by generator images.
NcPoly apply_homomorphism(const NcPoly& f, const std::vector<NcPoly>& images);
NcPoly apply_linear_map(const NcPoly& f, const LinearMap& m, const Alphabet& alphabet);

/// Reverses every word.
NcPoly opposite(const NcPoly& f);

/// Parses an element of the free algebra. Generator names of `alphabet` are
/// letters; other identifiers are scalar symbols subject to `scope`. Division
/// is allowed only by scalars.
NcPoly parse_ncpoly(std::string_view text, const Alphabet& alphabet, const ScalarScope& scope = {});

}  // namespace ncalg
