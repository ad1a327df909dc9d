#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncalg/presentation.hpp"

namespace ncalg {

/// Resolution matrices carried by a presentation file.
struct MatrixData {
  std::vector<std::vector<std::string>> entries;
  std::vector<int> row_shifts;
  std::vector<int> col_shifts;
};

/// Automorphism claim on the file's own presentation: one image per generator.
struct FileClaim {
  std::string tag;
  std::vector<std::string> images;
};

struct PresentationFile {
  Presentation presentation;
  std::optional<MatrixData> d3;
  std::optional<MatrixData> d2;
  std::vector<FileClaim> claims;
};

/// Parses the JSON document. JSON syntax errors and coefficient errors are
/// ParseErrors whose message names the line and column in the document (for
/// coefficients, the field and the offset inside its string).
PresentationFile parse_presentation_file(const std::string& text, const std::string& origin = "<input>");
PresentationFile read_presentation_file(const std::string& path);

/// Serializes generators, parameters, constraints, nonvanishing conditions
/// and relations. Coefficients are written in the expression grammar.
std::string write_presentation(const Presentation& pres);

}  // namespace ncalg
