#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "influence/graph.hpp"
#include "influence/report.hpp"

namespace influence {

// Knobs shared by the verification suites; zero means "suite default".
// Desk-scale caps: exhaustive general-graph sweeps stay at 22 total vertices,
// segment tables at 80, exact tree solves at depth 1. Those are the sizes
// where the exact solver still answers in seconds.
struct SuiteParams {
  uint64_t seed = 0x5eed1a11ULL;
  int instances = 0;   // seeded-instance count
  int max_n = 0;       // family size bound (segments, cycles)
  int total_max = 0;   // total-vertex cap for config/collection sweeps
  int trials = 0;      // sampled collections
  int exhaustive_n = 0; // exhaustive small-graph bound
};

using SuiteFn = VerifyReport (*)(const SuiteParams &);

struct SuiteInfo {
  std::string name;
  std::string description;
  std::vector<std::string> anchors; // mathematical facts the suite checks
  SuiteFn fn;
};

const std::vector<SuiteInfo> &suite_registry();
const SuiteInfo *find_suite(const std::string &name);
VerifyReport run_suite(const std::string &name, const SuiteParams &params = {});

// Anchors every registered run must collectively cover.
std::vector<std::string> required_anchors();

// Named entry points for the two experiment batteries that are also part of
// the registry.
VerifyReport tree_bounds(const SuiteParams &params = {});
VerifyReport quasi_path_bound(const SuiteParams &params = {});

// Regression fixtures: the worked starting position and the position whose
// first move strands a newly forced vertex.
GameGraph figure_one();
GameGraph figure_two();

} // namespace influence
