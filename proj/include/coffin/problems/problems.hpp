#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coffin/problems/algebraic.hpp"
#include "coffin/problems/analytic.hpp"
#include "coffin/problems/constructions.hpp"
#include "coffin/problems/geometric.hpp"
#include "coffin/problems/report.hpp"

namespace coffin::problems {

struct ProblemInfo {
  std::string id;
  std::string summary;
  VerifierKind kind;
  /// Corpus scripts rendered for this problem (empty when there is none).
  std::vector<std::string> scripts;
};

/// The 21 verified problems in id order.
const std::vector<ProblemInfo>& problem_catalog();
const ProblemInfo* find_problem(std::string_view id);

/// Runs one verifier. Throws UnknownProblem for ids outside the catalog; any
/// other exception becomes a report with status Error. elapsed_ms is set.
VerificationReport verify(const std::string& problem_id, std::uint64_t seed = 0);

}  // namespace coffin::problems
