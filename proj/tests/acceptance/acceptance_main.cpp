// Acceptance gate: every criterion prints one pass/fail line; the process
// exits non-zero when any fails. Tolerances are exact (integer scores), time
// budgets in milliseconds are stated per criterion.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "influence/families.hpp"
#include "influence/segments.hpp"
#include "influence/solver.hpp"
#include "influence/suites.hpp"

using namespace influence;

namespace {

int g_failures = 0;

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

void report(int number, const std::string &label, bool ok, double elapsed_ms,
            const std::string &detail = "") {
  std::printf("[%s] criterion %2d: %s (%.1f ms)%s%s\n", ok ? "ok" : "FAIL", number,
              label.c_str(), elapsed_ms, detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

std::string failing_claims(const VerifyReport &rep) {
  std::string s;
  for (const Claim &c : rep.claims) {
    if (c.status == ClaimStatus::Fail) {
      if (!s.empty()) s += "; ";
      s += c.id + " witness=" + c.witness.dump();
      if (s.size() > 300) {
        s.resize(300);
        s += "...";
        break;
      }
    }
  }
  return s;
}

VerifyReport timed(const std::string &suite, const SuiteParams &params, double &elapsed) {
  double start = now_ms();
  VerifyReport rep = run_suite(suite, params);
  elapsed = now_ms() - start;
  return rep;
}

} // namespace

int main() {
  SuiteParams defaults;

  // 1. Worked-position regression, exact quad, under a millisecond.
  {
    GameGraph g = figure_one();
    double start = now_ms();
    ScoreQuad q = solve(g);
    double elapsed = now_ms() - start;
    RelScores rs = rel_of(q);
    bool ok = q == ScoreQuad{4, 0, 6, 2} && rs == RelScores{2, -6} && elapsed < 1.0;
    report(1, "reference position scores (4,0,6,2), Ls=2, Rs=-6, <1ms", ok, elapsed);
  }

  // 2. Segment score table: the published block exactly and fast, the
  //    extension to 80 showing the period-4 stretch and the n=77 break.
  {
    double start = now_ms();
    segment_table(38);
    double t38 = now_ms() - start;
    double t80;
    SuiteParams params;
    params.max_n = 80;
    VerifyReport rep = timed("table1", params, t80);
    bool ok = !rep.hard_fail() && t38 < 1000.0 && t80 < 30000.0;
    report(2, "segment table to 38 (<1s) and to 80 (<30s) with tail facts", ok, t38 + t80,
           rep.hard_fail() ? failing_claims(rep) : "");
  }

  // 3. Single-segment score sets and parity refinements up to 80.
  {
    double elapsed;
    VerifyReport rep = timed("theorem1", defaults, elapsed);
    report(3, "segment score sets with refinements, n=2..80", !rep.hard_fail(), elapsed,
           failing_claims(rep));
  }

  // 4. Two-segment sum identities for k=1..6.
  {
    double elapsed;
    VerifyReport rep = timed("lemma7", defaults, elapsed);
    report(4, "two-segment sum identities", !rep.hard_fail(), elapsed, failing_claims(rep));
  }

  // 5. Extreme sums: Ls=6 for the double-plus pair, Ls=-1 for the 10+17 pair.
  {
    double elapsed;
    VerifyReport rep = timed("special-sums", defaults, elapsed);
    report(5, "extreme segment-sum values", !rep.hard_fail(), elapsed, failing_claims(rep));
  }

  // 6. Alternating cycles, sizes 4..40.
  {
    double elapsed;
    VerifyReport rep = timed("cycles", defaults, elapsed);
    bool ok = !rep.hard_fail() && rep.elapsed_ms < 10000.0;
    report(6, "cycle scores in {0,2} with the odd-|L| refinement, <10s", ok, elapsed,
           failing_claims(rep));
  }

  // 7. Property batteries: at least 100 seeded instances each, zero
  //    violations.
  {
    struct Battery {
      const char *suite;
      int instances;
    };
    const std::vector<Battery> batteries = {
        {"parity", 100},        {"nonzugzwang", 200},   {"monotonicity", 100},
        {"closure-evolution", 100}, {"commutation", 100}, {"remark3", 100},
        {"milnor", 100},        {"sum-negative", 100},  {"negation", 100},
        {"determinism", 100},   {"mode-equality", 120},
    };
    double total = 0;
    bool ok = true;
    std::string detail;
    for (const Battery &b : batteries) {
      SuiteParams params;
      params.instances = b.instances;
      double elapsed;
      VerifyReport rep = timed(b.suite, params, elapsed);
      total += elapsed;
      if (rep.hard_fail()) {
        ok = false;
        detail += std::string(b.suite) + ": " + failing_claims(rep) + " ";
      }
    }
    report(7, "eleven property suites, >=100 seeded instances, zero violations", ok, total,
           detail);
  }

  // 8. Tree family: exact small scores against the bound, the leaf-capture
  //    decomposition, counts and proportion trends.
  {
    double elapsed;
    VerifyReport rep = timed("trees", defaults, elapsed);
    report(8, "tree family bounds and decomposition", !rep.hard_fail(), elapsed,
           failing_claims(rep));
  }

  // 9. Quasi-path share bound over 500 seeded collections, under a minute.
  {
    double elapsed;
    VerifyReport rep = timed("quasipaths", defaults, elapsed);
    bool ok = !rep.hard_fail() && elapsed < 60000.0;
    report(9, "quasi-path second-player share bound, 500 collections, <60s", ok, elapsed,
           failing_claims(rep));
  }

  // 10. Specialized segment solver equals the general solver on every
  //     configuration of total size <= 22 with at most three components.
  {
    double elapsed;
    VerifyReport rep = timed("segment-oracle", defaults, elapsed);
    report(10, "segment solver equals general solver, exhaustive to 22", !rep.hard_fail(),
           elapsed, failing_claims(rep));
  }

  std::printf("%d/10 criteria passed\n", 10 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
