#include <doctest.h>

#include "influence/families.hpp"
#include "influence/random.hpp"
#include "influence/segments.hpp"
#include "influence/solver.hpp"
#include "influence/suites.hpp"

using namespace influence;

TEST_CASE("the worked position solves to (4,0,6,2)") {
  GameGraph g = figure_one();
  for (Mode mode : {Mode::Raw, Mode::Relevant}) {
    SolveOptions opts;
    opts.mode = mode;
    ScoreQuad q = solve(g, opts);
    CHECK(q == ScoreQuad{4, 0, 6, 2});
  }
  RelScores rs = rel_scores(g);
  CHECK(rs == RelScores{2, -6});
  CHECK(incentive(g) == 8);
}

TEST_CASE("degenerate positions") {
  GameGraph empty(0, {}, {});
  CHECK(solve(empty) == ScoreQuad{0, 0, 0, 0});
  CHECK(incentive(empty) == 0);

  GameGraph one_l(1, {Color::L}, {});
  CHECK(solve(one_l) == ScoreQuad{1, 1, 0, 0});
  SolveOptions raw;
  raw.mode = Mode::Raw;
  CHECK(solve(one_l, raw) == ScoreQuad{1, 1, 0, 0});

  GameGraph two_r(2, {Color::R, Color::R}, {{0, 1}});
  CHECK(solve(two_r) == ScoreQuad{0, 0, 2, 2});
  CHECK(rel_scores(two_r) == RelScores{-2, -2});
}

TEST_CASE("small segment scores match the published sequence head") {
  // n: 2 3 4 5 -> Ls 2 3 4 1, Rs -2 -3 -4 -5
  CHECK(rel_scores(make_segment(2)) == RelScores{2, -2});
  CHECK(rel_scores(make_segment(3, OddClass::Minus)) == RelScores{3, -3});
  CHECK(rel_scores(make_segment(4)) == RelScores{4, -4});
  CHECK(rel_scores(make_segment(5, OddClass::Minus)) == RelScores{1, -5});
}

TEST_CASE("constant-sum holds for every memo entry under audit") {
  SplitMix64 rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    GameGraph g = random_digraph(rng, 9, 1, 3);
    SolveOptions opts;
    opts.audit = true;
    CHECK_NOTHROW(solve(g, opts));
    opts.mode = Mode::Raw;
    CHECK_NOTHROW(solve(g, opts));
  }
}

TEST_CASE("solve_position answers subgames and folds reductions") {
  GameGraph g = figure_one();
  Solver solver(g);
  // The subgame on {v, x} belongs to Right entirely.
  VertexSet vx(g.size());
  vx.set(1);
  vx.set(3);
  CHECK(solver.solve_position(vx) == ScoreQuad{0, 0, 2, 2});
  CHECK(solver.solve_position(g.all()) == ScoreQuad{4, 0, 6, 2});
  CHECK(solver.memo_stats().entries > 0);
}

TEST_CASE("best moves with the lowest-id tie break") {
  GameGraph g = figure_one();
  SolveOptions raw;
  raw.mode = Mode::Raw;
  BestMove l = best_move(Position(g), Color::L, raw);
  CHECK(l.vertex == 0);
  CHECK(l.after == ScoreQuad{0, 0, 2, 2});
  // Both final captures win 6 for Right; the tie break picks y over z.
  BestMove r = best_move(Position(g), Color::R, raw);
  CHECK(r.vertex == 4);

  GameGraph single(2, {Color::L, Color::R}, {{0, 1}});
  BestMove only = best_move(Position(single), Color::L, raw);
  CHECK(only.vertex == 0);

  GameGraph no_l(1, {Color::R}, {});
  CHECK_THROWS_AS(best_move(Position(no_l), Color::L, raw), NoMoveError);

  // Under the reduced semantics both interior captures tie; lowest id wins.
  GameGraph seg = make_segment(5, OddClass::Minus);
  BestMove reduced = best_move(Position(seg), Color::L);
  CHECK(reduced.vertex == 1);
}

TEST_CASE("pruning, parallelism, routing and mode never change the quad") {
  SplitMix64 rng(1234);
  for (int trial = 0; trial < 30; ++trial) {
    GameGraph g = random_relevant_graph(rng, 11);
    ScoreQuad reference = solve(g);
    for (int bits = 0; bits < 8; ++bits) {
      SolveOptions opts;
      opts.pruning = bits & 1;
      opts.parallel_root = bits & 2;
      opts.segment_routing = bits & 4;
      CHECK(solve(g, opts) == reference);
    }
    SolveOptions raw;
    raw.mode = Mode::Raw;
    CHECK(solve(g, raw) == reference);
  }
}

TEST_CASE("segment routing answers straight from the specialized solver") {
  GameGraph g = disjoint_sum(make_segment(7, OddClass::Minus), make_segment(6));
  SolveOptions routed;
  routed.segment_routing = true;
  Solver solver(g, routed);
  ScoreQuad q = solver.solve();
  CHECK(q == solve(g));
  // The root is already a segment union, so the search never expands it.
  CHECK(solver.memo_stats().entries == 1);
}

TEST_CASE("milnor bounds report on the two-domino example") {
  GameGraph s2 = make_segment(2);
  VerifyReport rep = milnor_bounds_check(s2, s2);
  CHECK_FALSE(rep.hard_fail());
  CHECK(rep.claims.size() == 4);
  CHECK_THROWS_AS(milnor_bounds_check(figure_one(), s2), std::invalid_argument);
}

TEST_CASE("relative scores always share the board parity") {
  SplitMix64 rng(555);
  for (int trial = 0; trial < 40; ++trial) {
    GameGraph g = random_digraph(rng, 2 + static_cast<int>(rng.below(9)), 1, 3);
    RelScores rs = rel_scores(g);
    CHECK((rs.ls - g.size()) % 2 == 0);
    CHECK((rs.rs - g.size()) % 2 == 0);
  }
}
