#include <doctest.h>

#include <set>

#include "influence/suites.hpp"

using namespace influence;

TEST_CASE("registry covers every required anchor") {
  std::set<std::string> covered;
  for (const SuiteInfo &info : suite_registry()) {
    CHECK(info.fn != nullptr);
    for (const std::string &a : info.anchors) covered.insert(a);
  }
  for (const std::string &needed : required_anchors()) {
    INFO("anchor ", needed);
    CHECK(covered.count(needed) == 1);
  }
}

TEST_CASE("unknown suites are rejected") {
  CHECK_THROWS_AS(run_suite("no-such-suite"), std::invalid_argument);
  CHECK(find_suite("figure1") != nullptr);
  CHECK(find_suite("bogus") == nullptr);
}

TEST_CASE("reports are byte-identical for equal seeds") {
  SuiteParams params;
  params.instances = 20;
  params.trials = 30;
  params.total_max = 12;
  params.max_n = 12;
  params.exhaustive_n = 2;
  for (const char *name : {"milnor", "quasipaths", "proposition1", "trees", "remark3",
                           "mode-equality", "conjectures"}) {
    VerifyReport a = run_suite(name, params);
    VerifyReport b = run_suite(name, params);
    INFO("suite ", name);
    CHECK(a.payload().dump() == b.payload().dump());
  }
  VerifyReport a = run_suite("milnor", params);
  params.seed += 1;
  VerifyReport c = run_suite("milnor", params);
  CHECK(a.payload().dump() != c.payload().dump());
}

TEST_CASE("report serialization keeps time out of the payload") {
  VerifyReport rep = run_suite("figure1");
  nlohmann::json full = rep.to_json();
  CHECK(full.contains("elapsedMs"));
  CHECK_FALSE(full["payload"].dump().find("elapsedMs") != std::string::npos);
  CHECK(rep.to_csv().rfind("suite,claim,status\n", 0) == 0);
}

TEST_CASE("randomized suites pass at reduced size") {
  SuiteParams small;
  small.instances = 25;
  for (const char *name : {"parity", "nonzugzwang", "monotonicity", "closure-evolution",
                           "commutation", "remark3", "milnor", "sum-negative", "negation"}) {
    VerifyReport rep = run_suite(name, small);
    INFO("suite ", name);
    CHECK_FALSE(rep.hard_fail());
  }
}

TEST_CASE("structural suites pass at reduced size") {
  SuiteParams small;
  small.instances = 10;
  small.total_max = 10;
  small.max_n = 16;
  small.trials = 40;
  small.exhaustive_n = 3;
  for (const char *name : {"table1", "theorem1", "first-player-win", "lemma7", "special-sums",
                           "proposition1", "segment-oracle", "remark4", "move-taxonomy",
                           "lemma6", "mode-equality", "trees", "quasipaths", "determinism",
                           "conjectures", "figure1"}) {
    VerifyReport rep = run_suite(name, small);
    INFO("suite ", name);
    CHECK_FALSE(rep.hard_fail());
  }
}

TEST_CASE("the smallest alternating cycle escapes the score set") {
  SuiteParams params;
  params.max_n = 8;
  VerifyReport rep = run_suite("cycles", params);
  CHECK(rep.hard_fail());
  int fails = 0;
  for (const Claim &c : rep.claims) {
    if (c.status == ClaimStatus::Fail) {
      ++fails;
      CHECK(c.id == "ls-in-0-2");
      REQUIRE(c.witness.is_array());
      REQUIRE(c.witness.size() == 1);
      CHECK(c.witness[0]["n"] == 4);
      CHECK(c.witness[0]["ls"] == 4);
    }
  }
  CHECK(fails == 1);
}

TEST_CASE("conjecture probes never fail hard") {
  SuiteParams params;
  params.max_n = 40;
  VerifyReport rep = run_suite("conjectures", params);
  CHECK_FALSE(rep.hard_fail());
  for (const Claim &c : rep.claims) CHECK(c.status == ClaimStatus::Report);
}
