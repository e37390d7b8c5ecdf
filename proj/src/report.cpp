#include "influence/report.hpp"

#include <sstream>

namespace influence {

std::string to_string(ClaimStatus s) {
  switch (s) {
  case ClaimStatus::Pass:
    return "pass";
  case ClaimStatus::Fail:
    return "fail";
  case ClaimStatus::Report:
    return "report";
  }
  return "?";
}

void VerifyReport::add(std::string id, std::string anchor, bool ok, nlohmann::json witness) {
  claims.push_back({std::move(id), std::move(anchor),
                    ok ? ClaimStatus::Pass : ClaimStatus::Fail, std::move(witness)});
}

void VerifyReport::add_report(std::string id, std::string anchor, nlohmann::json witness) {
  claims.push_back({std::move(id), std::move(anchor), ClaimStatus::Report, std::move(witness)});
}

bool VerifyReport::hard_fail() const { return count(ClaimStatus::Fail) > 0; }

int VerifyReport::count(ClaimStatus s) const {
  int c = 0;
  for (const Claim &cl : claims) c += cl.status == s;
  return c;
}

nlohmann::json VerifyReport::payload() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const Claim &cl : claims) {
    nlohmann::json c{{"id", cl.id}, {"anchor", cl.anchor}, {"status", to_string(cl.status)}};
    if (!cl.witness.is_null()) c["witness"] = cl.witness;
    cs.push_back(std::move(c));
  }
  return nlohmann::json{{"suite", suite}, {"seed", seed}, {"params", params}, {"claims", cs}};
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json j = nlohmann::json{{"payload", payload()}, {"elapsedMs", elapsed_ms}};
  return j;
}

std::string VerifyReport::to_csv() const {
  std::ostringstream out;
  out << "suite,claim,status\n";
  for (const Claim &cl : claims)
    out << suite << ',' << cl.id << ',' << to_string(cl.status) << '\n';
  return out.str();
}

std::string VerifyReport::summary() const {
  std::ostringstream out;
  for (const Claim &cl : claims) {
    out << "  [" << to_string(cl.status) << "] " << cl.id;
    if (cl.status == ClaimStatus::Fail && !cl.witness.is_null())
      out << "  witness=" << cl.witness.dump();
    out << '\n';
  }
  out << suite << ": " << count(ClaimStatus::Pass) << " pass, " << count(ClaimStatus::Fail)
      << " fail, " << count(ClaimStatus::Report) << " report-only";
  return out.str();
}

} // namespace influence
