#include <doctest.h>

#include <algorithm>
#include <climits>
#include <vector>

#include "influence/families.hpp"
#include "influence/random.hpp"
#include "influence/segments.hpp"
#include "influence/solver.hpp"
#include "influence/suites.hpp"

using namespace influence;

namespace {

// Literal transcription of the defining recursion onto plain id vectors: no
// memoization, no bitsets, no shared code with the production search. Each
// call enumerates every legal capture; a player without a vertex waits.
struct BruteForce {
  const GameGraph &g;

  std::vector<int> closure(const std::vector<int> &alive, int v, bool forward) const {
    std::vector<int> seen{v};
    for (size_t i = 0; i < seen.size(); ++i) {
      for (const Arc &a : g.arcs()) {
        int from = forward ? a.from : a.to;
        int to = forward ? a.to : a.from;
        if (from != seen[i]) continue;
        if (std::find(alive.begin(), alive.end(), to) == alive.end()) continue;
        if (std::find(seen.begin(), seen.end(), to) == seen.end()) seen.push_back(to);
      }
    }
    return seen;
  }

  // Vertices the given player ends up removing from here on, both optimal.
  int gain(std::vector<int> alive, Color scored, Color to_move) const {
    if (alive.empty()) return 0;
    bool has_own = false;
    for (int v : alive) has_own |= g.color(v) == to_move;
    if (!has_own) return gain(std::move(alive), scored, opposite(to_move));
    int best = to_move == scored ? INT_MIN : INT_MAX;
    for (int v : alive) {
      if (g.color(v) != to_move) continue;
      std::vector<int> removed = closure(alive, v, to_move == Color::L);
      std::vector<int> rest;
      for (int w : alive) {
        if (std::find(removed.begin(), removed.end(), w) == removed.end())
          rest.push_back(w);
      }
      int value = gain(std::move(rest), scored, opposite(to_move));
      if (to_move == scored) {
        best = std::max(best, static_cast<int>(removed.size()) + value);
      } else {
        best = std::min(best, value);
      }
    }
    return best;
  }

  ScoreQuad quad() const {
    std::vector<int> all(g.size());
    for (int v = 0; v < g.size(); ++v) all[v] = v;
    return {static_cast<int32_t>(gain(all, Color::L, Color::L)),
            static_cast<int32_t>(gain(all, Color::L, Color::R)),
            static_cast<int32_t>(gain(all, Color::R, Color::R)),
            static_cast<int32_t>(gain(all, Color::R, Color::L))};
  }
};

} // namespace

TEST_CASE("both search modes match the brute-force recursion") {
  SplitMix64 rng(90210);
  SolveOptions raw;
  raw.mode = Mode::Raw;
  auto check = [&](const GameGraph &g) {
    ScoreQuad expected = BruteForce{g}.quad();
    CHECK(solve(g, raw) == expected);
    CHECK(solve(g) == expected);
  };
  check(figure_one());
  check(figure_two());
  check(make_segment(7, OddClass::Minus));
  for (int trial = 0; trial < 60; ++trial) {
    int n = rng.range(2, 8);
    check(random_digraph(rng, n, static_cast<uint32_t>(rng.range(1, 4)),
                         static_cast<uint32_t>(n) + 2));
  }
}

TEST_CASE("boards beyond one key word solve correctly") {
  // A known position padded with isolated R vertices: each pad vertex is
  // forced, so only Right's totals shift.
  GameGraph fig = figure_one();
  GameGraph wide = fig;
  for (int i = 0; i < 64; ++i) wide = disjoint_sum(wide, GameGraph(1, {Color::R}, {}));
  REQUIRE(wide.size() == 70);
  CHECK(solve(wide) == ScoreQuad{4, 0, 70, 66});
  SolveOptions audited;
  audited.audit = true;
  CHECK(solve(wide, audited) == ScoreQuad{4, 0, 70, 66});

  // A 70-cycle: the opening capture leaves a 67-segment with L endpoints.
  SolveOptions routed;
  routed.segment_routing = true;
  RelScores cyc = rel_scores(make_cycle(70), routed);
  RelScores tail = solve_segment_config(SegmentConfig({{67, OddClass::Plus}}));
  CHECK(cyc.ls == 3 + tail.rs);
  CHECK((cyc.ls == 0 || cyc.ls == 2));

  // Three key words: structural operations on a deep tree.
  GameGraph t32 = make_tree({3, 2});
  REQUIRE(t32.size() == 94);
  Position p(t32);
  CHECK(p.is_relevant());
  CHECK(p.succ_closure(0).count() == 94);
  GameGraph j = disjoint_sum(t32, t32);
  REQUIRE(j.size() == 188);
  CHECK(weak_components(j, j.all()).size() == 2);
  Position after = Position(j).apply_move(Color::R, (j.all() & j.mask(Color::R)).first(),
                                          Mode::Relevant);
  CHECK(after.credit(Color::R) == 1); // one sibling leaf strands
}
