#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncalg/presentation.hpp"

namespace ncalg {

/// Matrix of free-algebra elements between graded free modules. Shifts are
/// the k in A(k): entry (i,j) is homogeneous of total degree
/// col_shifts[j] - row_shifts[i], or zero.
struct NcMatrix {
  std::vector<std::vector<NcPoly>> entries;
  std::vector<int> row_shifts;
  std::vector<int> col_shifts;

  std::size_t rows() const { return entries.size(); }
  std::size_t cols() const { return entries.empty() ? 0 : entries[0].size(); }
  const NcPoly& at(std::size_t i, std::size_t j) const { return entries[i][j]; }
};

/// Checks sizes and the degree invariant; throws InputError.
NcMatrix make_matrix(std::vector<std::vector<NcPoly>> entries, std::vector<int> row_shifts,
                     std::vector<int> col_shifts, const Alphabet& alphabet);

/// Parses entry strings over the presentation.
NcMatrix parse_matrix(const std::vector<std::vector<std::string>>& entries, std::vector<int> row_shifts,
                      std::vector<int> col_shifts, const Presentation& pres);

/// Product in the free algebra: (m n)_ik = sum_j m_ij n_jk.
NcMatrix multiply(const NcMatrix& m, const NcMatrix& n);

/// Right-multiplication maps on row vectors, listed from the leftmost free
/// module: maps[0] is d4 and maps.back() is d1. Consecutive composites
/// maps[i] * maps[i+1] must vanish in the algebra.
struct FreeComplex {
  std::vector<NcMatrix> maps;
  /// Positive degree shifts of each free module, from F0 = A to the last.
  std::vector<std::vector<int>> euler_shifts() const;
};

/// The complex 0 -> A(-5) -> A(-4)^3 -> A(-2)^2 + A(-3)^2 -> A(-1)^3 -> A
/// with d4 = (x1, x2, x3), d1 = (x1, x2, x3)^t and the given d3 (3x4),
/// d2 (4x3). The columns of d3 and rows of d2 are ordered by degrees 2, 2, 3, 3.
FreeComplex build_standard_complex(const Presentation& pres, const NcMatrix& d3, const NcMatrix& d2);
FreeComplex build_standard_complex(const Presentation& pres, const std::vector<std::vector<std::string>>& d3,
                                   const std::vector<std::vector<std::string>>& d2);

struct ComplexReport {
  bool pass = false;
  std::vector<std::string> failures;
  std::vector<std::string> side_conditions;
};

ComplexReport verify_complex(const FreeComplex& cx, const Presentation& pres, const CompletionOptions& options = {});

struct ResolutionShapeReport {
  bool pass = false;
  Scalar alpha, phi, beta, phi_prime;
  /// (3,1) entry is c (-x3 x1) + y x3.
  Scalar c;
  NcPoly y;
  Scalar determinant;
  std::string message;
};

/// Shape conditions on d3: first column (alpha x3^2, phi x3^2, c(-x3 x1) + y x3)
/// with c != 0 and y of degree 1, fourth column (beta x3, phi' x3, *), and
/// alpha phi' - beta phi != 0.
ResolutionShapeReport verify_resolution_shape(const FreeComplex& cx, const Presentation& pres);

/// d2 * d1 against the defining relations: every row must be a nonzero
/// scalar multiple of a distinct relation.
struct TranscriptionReport {
  bool pass = false;
  /// For row i, the matched relation index and the scalar.
  std::vector<std::optional<std::pair<std::size_t, Scalar>>> matches;
  std::string message;
};
TranscriptionReport check_transcription(const FreeComplex& cx, const Presentation& pres);

struct NonzerodivisorReport {
  bool pass = false;
  int bound = 0;
  std::string message;
};

/// Right multiplication by the generator is injective on every bidegree
/// through `bound`: the normal forms of w * x over the irreducible words w
/// are linearly independent.
NonzerodivisorReport right_nonzerodivisor_check(const Presentation& pres, std::size_t generator, int bound,
                                                const CompletionOptions& options = {});

}  // namespace ncalg
