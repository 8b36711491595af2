#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coffin/exactnum/exact_real.hpp"
#include "coffin/problems/report.hpp"

namespace coffin::problems {

using exactnum::BigInt;
using exactnum::BigRational;
using exactnum::ExactReal;

/// Thrown by the typed entry points when an internal certificate fails.
class CertificateFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExactInterval {
  ExactReal lo;
  ExactReal hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(const ExactReal& x) const;
};

/// Solution set of x(8√(1−x) + √(1+x)) ≤ 11√(1+x) − 16√(1−x), x > 0.
ExactInterval p01_certificate();
VerificationReport verify_p01(std::uint64_t seed);

/// Real solutions of 2∛(2y−1) = y³ + 1, ascending.
std::vector<ExactReal> p12_roots();
VerificationReport verify_p12(std::uint64_t seed);

struct P17Solutions {
  /// "x = π/4 + kπ"
  std::string description;
  /// coeff_bound(−t⁶−2t⁵+t⁴+t³−t, 1/2)
  BigRational bound;
  bool residue_exact = false;
  /// |LHS − RHS| at π/4 and π/3 (50 digits).
  double residual_pi4 = 0;
  double residual_pi3 = 0;
};
P17Solutions p17_solutions();
VerificationReport verify_p17(std::uint64_t seed);

VerificationReport p38_certificate();
VerificationReport verify_p38(std::uint64_t seed);

VerificationReport p42_points();
VerificationReport verify_p42(std::uint64_t seed);

struct P45Result {
  std::uint64_t pairs = 0;
  /// Pairs whose exact apex has zero √3 part in both coordinates.
  std::uint64_t rational_apexes = 0;
  /// Pairs whose rounded apex passes the exact integer distance test.
  std::uint64_t lattice_triangles = 0;
};
P45Result p45_search(int radius);
VerificationReport verify_p45(std::uint64_t seed);

VerificationReport p52_certificate();
VerificationReport verify_p52(std::uint64_t seed);

VerificationReport p61_digits();
VerificationReport verify_p61(std::uint64_t seed);

VerificationReport p65_identity_check();
VerificationReport verify_p65(std::uint64_t seed);

}  // namespace coffin::problems
