#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coffin::problems {

/// Artifact-wide numeric tolerances.
namespace tolerance {
inline constexpr double kGeometry = 1e-9;
inline constexpr double kEvaluation = 1e-12;
inline constexpr double kSolverResidual = 1e-10;
inline constexpr double kPerturbationFloor = 1e-6;
inline constexpr double kQuadrature = 1e-10;
inline constexpr double kMinimizer = 1e-4;
}  // namespace tolerance

enum class Status { Pass, Fail, Error };
enum class CertificateKind { Exact, Numeric };
enum class VerifierKind { ExactCertificate, Construction, Oracle };

std::string to_string(Status status);
std::string to_string(CertificateKind kind);
std::string to_string(VerifierKind kind);

struct Certificate {
  std::string claim;
  CertificateKind kind = CertificateKind::Exact;
  std::string witness;
  bool pass = false;
};

struct VerificationReport {
  std::string problem_id;
  Status status = Status::Error;
  std::vector<Certificate> certificates;
  std::vector<std::string> figures;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;
  /// Key value shown in one-line summaries.
  std::string headline;
  /// Set when status is Error.
  std::string error;

  bool passed() const { return status == Status::Pass; }
};

class UnknownProblem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Accumulates certificates; the status is Pass iff every certificate passed.
class ReportBuilder {
 public:
  ReportBuilder(std::string problem_id, std::uint64_t seed);

  bool exact(std::string claim, bool pass, std::string witness);
  bool numeric(std::string claim, bool pass, std::string witness);
  void headline(std::string text) { report_.headline = std::move(text); }
  void figure(std::string path) { report_.figures.push_back(std::move(path)); }
  /// Appends every certificate of `other`, prefixing claims with `prefix`.
  void merge(const VerificationReport& other, const std::string& prefix);

  VerificationReport finish();

 private:
  VerificationReport report_;
};

/// Short decimal form of a double for witnesses (17 significant digits).
std::string fmt(double value);

}  // namespace coffin::problems
