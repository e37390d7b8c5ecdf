#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace influence {

enum class ClaimStatus : uint8_t {
  Pass,
  Fail,   // hard failure: flips the suite and the process exit code
  Report, // informational only (open conjectures, observations)
};

std::string to_string(ClaimStatus s);

struct Claim {
  std::string id;
  std::string anchor; // the named mathematical fact this claim checks
  ClaimStatus status = ClaimStatus::Pass;
  nlohmann::json witness; // values, and a reproduction handle on failure
};

// Machine-readable outcome of one verification suite. Everything except
// elapsed_ms is deterministic given the seed; payload() returns exactly that
// part, so equal seeds must yield byte-identical payload dumps.
struct VerifyReport {
  std::string suite;
  uint64_t seed = 0;
  nlohmann::json params;
  std::vector<Claim> claims;
  double elapsed_ms = 0;

  void add(std::string id, std::string anchor, bool ok, nlohmann::json witness = {});
  void add_report(std::string id, std::string anchor, nlohmann::json witness = {});

  bool hard_fail() const;
  int count(ClaimStatus s) const;

  nlohmann::json payload() const;
  nlohmann::json to_json() const;
  std::string to_csv() const; // suite,claim,status rows

  // Short human-readable outcome, one line per claim plus a summary.
  std::string summary() const;
};

} // namespace influence
