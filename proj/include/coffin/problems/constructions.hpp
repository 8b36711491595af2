#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "coffin/problems/report.hpp"
#include "coffin/sketch/interpreter.hpp"

namespace coffin::problems {

class InfeasibleInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Script ids of the constructions corpus: p10, p19a, p19b, p22, p30, p48, p50, p68.
const std::vector<std::string>& construction_ids();

/// Parsed corpus script; throws UnknownProblem for ids without one.
const sketch::Program& construction_program(const std::string& script_id);

/// Runs a corpus script; an empty instance uses the script defaults.
sketch::Trace construction_trace(const std::string& script_id, const sketch::Bindings& instance = {});

/// Executes the script and reports every assertion plus the script's
/// postconditions (tool discipline, p19b sampled minimality, p68 incidence).
VerificationReport run_construction(const std::string& script_id, const sketch::Bindings& instance,
                                    std::uint64_t seed);

/// p48 parameters measured from a quadrilateral ABCD (A, a point on ray AD,
/// four sides, and the midline between AB and CD).
sketch::Bindings p48_instance_from(const std::array<euclid::Point, 4>& quad);
/// Random rational convex quadrilateral.
std::array<euclid::Point, 4> p48_random_quadrilateral(std::uint64_t seed);

struct P68Square {
  std::array<euclid::Point, 4> vertices;
  /// A on V1V2, B on V2V3, C on V3V4, D on V4V1.
  std::array<euclid::Point, 4> side_points;
};
/// Random rational square with rational points on its sides, rejecting
/// instances where the auxiliary point D' coincides with D.
P68Square p68_random_square(std::uint64_t seed);

/// p19a instance whose perimeter is measured from a random cutting line.
sketch::Bindings p19a_round_trip_instance(std::uint64_t seed);

VerificationReport verify_p10(std::uint64_t seed);
VerificationReport verify_p19(std::uint64_t seed);
VerificationReport verify_p22(std::uint64_t seed);
VerificationReport verify_p30(std::uint64_t seed);
VerificationReport verify_p48(std::uint64_t seed);
VerificationReport verify_p50(std::uint64_t seed);
VerificationReport verify_p68(std::uint64_t seed);

}  // namespace coffin::problems
