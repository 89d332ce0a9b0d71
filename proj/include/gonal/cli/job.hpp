#pragma once

#include "gonal/groebner/solve.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gonal {

using Report = nlohmann::ordered_json;

constexpr int kReportSchemaVersion = 1;

/// Stages in execution order. "quintic" is the genus-5 counterpart of
/// "surface" and "scrolls".
const std::vector<std::string>& stage_names();

struct JobSpec {
  /// classify, betti, gonal, plane-model, radical or full.
  std::string command = "full";
  /// Contents of the input file.
  std::string input;
  /// Overrides the field header when set.
  std::optional<std::string> field;
  std::uint64_t seed = kDefaultSolveSeed;
  int jobs = 1;
  std::string format = "json";
  /// Last stage to run; empty runs everything the command needs.
  std::string stop_after;
  /// Single patch for the scroll search: pivot columns of F and of G.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> patch;
  /// Gonal parameter num/den for plane-curve input to `radical`.
  std::optional<std::pair<std::string, std::string>> parameter;
  /// Record wall-clock per stage (breaks byte-identical output).
  bool timings = false;
  int samples = 20;
};

/// 64-bit FNV-1a of the raw input, as 16 hex digits.
std::string fnv1a_hex(const std::string& data);

/// Parses "012,34" into F pivots {0,1,2} and G pivots {3,4}.
std::pair<std::vector<int>, std::vector<int>> parse_patch(const std::string& spec);

/// Runs the job. Errors inside a stage are caught and recorded under
/// "error" with the stage tag; errors in the job spec itself throw.
Report run_job(const JobSpec& job);

/// Human-readable rendering of a report.
std::string render_text(const Report& report);

/// Process exit status for a report: 0 on success, 2 when a stage failed.
int exit_status(const Report& report);

}  // namespace gonal
