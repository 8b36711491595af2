#include <stdexcept>

#include "coffin/cli/cli.hpp"

namespace coffin::cli {

using problems::Certificate;
using problems::CertificateKind;
using problems::Status;
using problems::VerificationReport;

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["problem"] = report.problem_id;
  j["status"] = problems::to_string(report.status);
  j["headline"] = report.headline;
  if (!report.error.empty()) j["error"] = report.error;
  auto certs = nlohmann::ordered_json::array();
  for (const auto& c : report.certificates) {
    nlohmann::ordered_json cj;
    cj["claim"] = c.claim;
    cj["kind"] = problems::to_string(c.kind);
    cj["witness"] = c.witness;
    cj["pass"] = c.pass;
    certs.push_back(std::move(cj));
  }
  j["certificates"] = std::move(certs);
  j["figures"] = report.figures;
  j["seed"] = report.seed;
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.problem_id = j.at("problem").get<std::string>();
  const auto status = j.at("status").get<std::string>();
  if (status == "pass") {
    r.status = Status::Pass;
  } else if (status == "fail") {
    r.status = Status::Fail;
  } else if (status == "error") {
    r.status = Status::Error;
  } else {
    throw std::invalid_argument("unknown status: " + status);
  }
  r.headline = j.value("headline", "");
  r.error = j.value("error", "");
  for (const auto& cj : j.at("certificates")) {
    Certificate c;
    c.claim = cj.at("claim").get<std::string>();
    const auto kind = cj.at("kind").get<std::string>();
    if (kind != "exact" && kind != "numeric") throw std::invalid_argument("unknown certificate kind: " + kind);
    c.kind = kind == "exact" ? CertificateKind::Exact : CertificateKind::Numeric;
    c.witness = cj.at("witness").get<std::string>();
    c.pass = cj.at("pass").get<bool>();
    r.certificates.push_back(std::move(c));
  }
  r.figures = j.at("figures").get<std::vector<std::string>>();
  r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

}  // namespace coffin::cli
