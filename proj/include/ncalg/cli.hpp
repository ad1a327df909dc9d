#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncalg/hilbert.hpp"
#include "ncalg/presentation.hpp"

namespace ncalg {

inline constexpr const char* kToolVersion = "ncalg 1.0.0";

enum class Status { Pass, Fail, Unknown };
std::string to_string(Status s);

struct CheckRecord {
  std::string id;
  Status status = Status::Unknown;
  std::string details;
  double seconds = 0;
};

struct RunReport {
  std::string tool_version = kToolVersion;
  std::string command;
  std::string input_digest;
  std::vector<CheckRecord> checks;

  /// 0 all pass, 1 any FAIL, 3 UNKNOWN present without FAIL.
  int exit_code() const;
  std::string text(bool timings = false) const;
  std::string json(bool timings = false) const;
};

struct RunOptions {
  int bound = 8;
  bool symbolic = false;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::size_t budget = 50000;
};

/// Completion through `bound`, then every ambiguity with witness degree
/// <= bound must resolve to zero in the completed system.
struct DiamondReport {
  bool pass = false;
  std::vector<std::string> added;  // new relations, in discovery order
  std::vector<std::string> added_leads;
  std::size_t ambiguities = 0;
  std::size_t unresolved = 0;
  std::vector<std::string> side_conditions;
  std::string message;
};
DiamondReport diamond_check(const Presentation& pres, int bound, const CompletionOptions& options = {});

/// Series 1/p of an AS-regular algebra of global dimension 2, 3 or 4 whose
/// minimal resolution has the shape forced by the generator and relation
/// (bi)degrees and the Gorenstein symmetry; nullopt when no shape fits.
std::optional<SeriesExpr> candidate_series(const Presentation& pres, bool bivariate);

/// 64-bit FNV-1a, hex.
std::string digest(const std::string& data);

RunReport cmd_verify_family(const std::string& name, const std::map<std::string, std::string>& params,
                            const RunOptions& options);
RunReport cmd_classify(const std::string& case_id, const RunOptions& options);
RunReport cmd_check(const std::string& path, const RunOptions& options);
RunReport cmd_hilbert(const Presentation& pres, const std::optional<std::string>& series, const RunOptions& options,
                      const std::string& input = {});
/// Without elements, runs the family's catalog normal-element and chain claims.
RunReport cmd_normal(const Presentation& pres, const std::vector<std::string>& elements, const RunOptions& options,
                     const std::string& input = {});
RunReport cmd_resolution(const std::string& name, const std::map<std::string, std::string>& params,
                         const RunOptions& options);
/// No family: every catalog claim, the Ore structures, the signature table
/// and the opposite-of-H certificate. With a family: signature and map-shape
/// check at that point.
RunReport cmd_iso(const std::optional<std::string>& name, const std::map<std::string, std::string>& params,
                  const std::vector<std::string>& tags, const RunOptions& options);
/// Twists by diag(weights); `twisted` receives the presentation file text.
RunReport cmd_twist(const Presentation& pres, const std::vector<std::string>& weights, const RunOptions& options,
                    std::string* twisted, const std::string& input = {});

/// Parses arguments and runs one subcommand; returns the exit code
/// (2 on usage or input errors).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ncalg
