#include "coffin/problems/report.hpp"

#include <cstdio>

namespace coffin::problems {

std::string to_string(Status status) {
  switch (status) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Error:
      return "error";
  }
  return "error";
}

std::string to_string(CertificateKind kind) { return kind == CertificateKind::Exact ? "exact" : "numeric"; }

std::string to_string(VerifierKind kind) {
  switch (kind) {
    case VerifierKind::ExactCertificate:
      return "exact-certificate";
    case VerifierKind::Construction:
      return "construction";
    case VerifierKind::Oracle:
      return "oracle";
  }
  return "oracle";
}

ReportBuilder::ReportBuilder(std::string problem_id, std::uint64_t seed) {
  report_.problem_id = std::move(problem_id);
  report_.seed = seed;
}

bool ReportBuilder::exact(std::string claim, bool pass, std::string witness) {
  report_.certificates.push_back({std::move(claim), CertificateKind::Exact, std::move(witness), pass});
  return pass;
}

bool ReportBuilder::numeric(std::string claim, bool pass, std::string witness) {
  report_.certificates.push_back({std::move(claim), CertificateKind::Numeric, std::move(witness), pass});
  return pass;
}

void ReportBuilder::merge(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.certificates) {
    Certificate copy = c;
    copy.claim = prefix + copy.claim;
    report_.certificates.push_back(std::move(copy));
  }
  for (const auto& f : other.figures) report_.figures.push_back(f);
  if (other.status == Status::Error) {
    report_.certificates.push_back({prefix + "completed without error", CertificateKind::Exact, other.error, false});
  }
}

VerificationReport ReportBuilder::finish() {
  bool all = !report_.certificates.empty();
  for (const auto& c : report_.certificates) all = all && c.pass;
  report_.status = all ? Status::Pass : Status::Fail;
  return std::move(report_);
}

std::string fmt(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace coffin::problems
