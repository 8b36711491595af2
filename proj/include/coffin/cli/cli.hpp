#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coffin/problems/report.hpp"
#include "coffin/sketch/interpreter.hpp"

namespace coffin::cli {

enum class OutputMode { Human, Json };

struct RunConfig {
  std::vector<std::string> ids;  // empty with all = true selects every problem
  bool all = false;
  std::uint64_t seed = 0;
  std::filesystem::path output_dir = "coffin-reports";
  bool figures = false;
  unsigned jobs = 1;
  OutputMode mode = OutputMode::Human;
};

/// Report without elapsed time; identical bytes for identical (id, seed).
nlohmann::ordered_json report_to_json(const problems::VerificationReport& report);
/// Inverse of report_to_json (elapsed_ms is left at 0).
problems::VerificationReport report_from_json(const nlohmann::json& json);

/// Parameter bindings from an instance file: points [x, y], lines [a, b, c],
/// circles [[cx, cy], r2], lengths and ratios as numbers or "p/q" strings.
sketch::Bindings parse_instance(const sketch::Program& program, const nlohmann::json& json);

/// Runs the selected verifiers (in parallel up to config.jobs) in id order.
std::vector<problems::VerificationReport> run_batch(const RunConfig& config);

/// Exit status for a batch: 0 iff every report passed, else 1.
int exit_status(const std::vector<problems::VerificationReport>& reports);

/// Entry point shared by the executable and the tests. Exit codes: 0 all
/// pass, 1 some verifier failed, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coffin::cli
