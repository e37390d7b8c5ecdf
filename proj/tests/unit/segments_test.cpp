#include <doctest.h>

#include "influence/families.hpp"
#include "influence/random.hpp"
#include "influence/segments.hpp"
#include "influence/solver.hpp"

using namespace influence;

TEST_CASE("descriptor validation") {
  CHECK_THROWS_AS(SegmentDescriptor(1, OddClass::Minus), std::invalid_argument);
  CHECK_THROWS_AS(SegmentDescriptor(5, OddClass::None), std::invalid_argument);
  CHECK_THROWS_AS(SegmentDescriptor(4, OddClass::Plus), std::invalid_argument);
  CHECK_NOTHROW(SegmentDescriptor(4, OddClass::None));
  CHECK_NOTHROW(SegmentDescriptor(5, OddClass::Plus));
}

TEST_CASE("config canonical form, counts and classes") {
  SegmentConfig cfg({{5, OddClass::Minus}, {2, OddClass::None}, {2, OddClass::None}});
  CHECK(cfg.segments().front().length == 2);
  CHECK(cfg.total_size() == 9);
  CHECK(cfg.count(Color::L) == 4);
  CHECK(cfg.count(Color::R) == 5);
  CHECK(cfg.classify() == ConfigClass::Minus);
  CHECK(SegmentConfig({{4, OddClass::None}}).classify() == ConfigClass::Equal);
  CHECK(SegmentConfig({{3, OddClass::Plus}}).classify() == ConfigClass::Plus);
  CHECK(SegmentConfig({{3, OddClass::Plus}, {5, OddClass::Minus}}).classify() ==
        ConfigClass::Mixed);
  CHECK(SegmentConfig({{2, OddClass::None}, {5, OddClass::Minus}}).to_string() == "[2 5-]");
}

TEST_CASE("move classification follows the removal taxonomy") {
  SegmentConfig cfg({{2, OddClass::None}, {3, OddClass::Minus}, {5, OddClass::Minus},
                     {7, OddClass::Minus}});
  // Endpoint of a 2-segment: plain border capture.
  CHECK(classify_move(cfg, 0, 1).k == 2);
  CHECK_FALSE(classify_move(cfg, 0, 1).cutting);
  // Anywhere on a 3-segment removes all three.
  CHECK(classify_move(cfg, 1, 1).k == 3);
  CHECK(classify_move(cfg, 1, 2).k == 3);
  // Next to one endpoint of a 5-segment: border 3.
  CHECK(classify_move(cfg, 2, 2).k == 3);
  CHECK_FALSE(classify_move(cfg, 2, 2).cutting);
  // Middle of a 5-segment strands both endpoints.
  CHECK(classify_move(cfg, 2, 3).k == 5);
  // One neighbor two steps from an endpoint: border 4.
  CHECK(classify_move(cfg, 3, 3).k == 4);
  // Deep interior of a 7-segment: the cutting 3.
  CHECK(classify_move(cfg, 3, 4).k == 3);
  CHECK(classify_move(cfg, 3, 4).cutting);
  CHECK_THROWS_AS(classify_move(cfg, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(classify_move(cfg, 0, 3), std::invalid_argument);
}

TEST_CASE("classification agrees with materialized removal sets") {
  SplitMix64 rng(8080);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<SegmentDescriptor> segs;
    int total = 0;
    while (total < 10) {
      int len = rng.range(2, 7);
      segs.push_back({len, len % 2 ? (rng.chance(1, 2) ? OddClass::Minus : OddClass::Plus)
                                   : OddClass::None});
      total += len;
    }
    SegmentConfig cfg(std::move(segs));
    GameGraph g = materialize(cfg);
    Position p(g);
    int offset = 0;
    for (size_t s = 0; s < cfg.segments().size(); ++s) {
      for (int pos = 1; pos <= cfg.segments()[s].length; ++pos) {
        MoveClass mc = classify_move(cfg, static_cast<int>(s), pos);
        CHECK(p.rmv(offset + pos - 1).vertices.count() == mc.k);
        CHECK(mc.k >= 2);
        CHECK(mc.k <= 5);
      }
      offset += cfg.segments()[s].length;
    }
  }
}

TEST_CASE("engine reproduces published sum identities") {
  SegmentEngine engine;
  CHECK(engine.solve(SegmentConfig({{4, OddClass::None}, {6, OddClass::None}})).rs == -2);
  CHECK(engine.solve(SegmentConfig({{7, OddClass::Minus}, {7, OddClass::Plus}})).rs == 0);
  CHECK(engine.solve(SegmentConfig({{5, OddClass::Plus}, {17, OddClass::Plus}})).ls == 6);
  CHECK(engine.solve(SegmentConfig({{10, OddClass::None}, {17, OddClass::Minus}})).ls == -1);
}

TEST_CASE("engine equals the general solver on random configs") {
  SplitMix64 rng(616);
  SegmentEngine engine;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<SegmentDescriptor> segs;
    int total = 0;
    int parts = rng.range(1, 3);
    for (int i = 0; i < parts && total + 2 <= 16; ++i) {
      int len = rng.range(2, std::min(16 - total, 9));
      segs.push_back({len, len % 2 ? (rng.chance(1, 2) ? OddClass::Minus : OddClass::Plus)
                                   : OddClass::None});
      total += len;
    }
    SegmentConfig cfg(std::move(segs));
    CHECK(engine.solve(cfg) == rel_of(solve(materialize(cfg))));
    CHECK(engine.quad(cfg) == solve(materialize(cfg)));
  }
}

TEST_CASE("engine options are value-preserving") {
  SegmentEngine plain({.restrict_two_moves = false, .milnor_cancel = false,
                       .negation_fold = false});
  SegmentEngine tuned;
  for (int n = 2; n <= 18; ++n) {
    SegmentConfig cfg({{n, n % 2 ? OddClass::Minus : OddClass::None}});
    CHECK(plain.solve(cfg) == tuned.solve(cfg));
  }
  SegmentConfig pair({{6, OddClass::None}, {6, OddClass::None}, {3, OddClass::Plus}});
  CHECK(plain.solve(pair) == tuned.solve(pair));
}

TEST_CASE("table starts with the singleton convention") {
  std::vector<SegmentTableRow> rows = segment_table(5);
  CHECK(rows[0].n == 1);
  CHECK(rows[0].ls == -1);
  CHECK(rows[0].rs == -1);
  CHECK(rows[1].ls == 2);
  CHECK(rows[4].ls == 1);
  CHECK(rows[4].rs == -5);
  int streamed = 0;
  segment_table(4, OddClass::Minus, [&](const SegmentTableRow &) { ++streamed; });
  CHECK(streamed == 4);
  CHECK_THROWS_AS(segment_table(0), std::invalid_argument);
  // The opposite convention flips the singleton's owner.
  CHECK(segment_table(1, OddClass::Plus)[0].ls == 1);
}

TEST_CASE("odd-class generation is rejected for even sizes") {
  CHECK_THROWS_AS(make_segment(4, OddClass::Minus), std::invalid_argument);
  CHECK_THROWS_AS(make_segment(5, OddClass::None), std::invalid_argument);
  CHECK_THROWS_AS(make_segment(1, OddClass::Minus), std::invalid_argument);
}

TEST_CASE("recognition accepts segment unions and rejects everything else") {
  GameGraph good = disjoint_sum(make_segment(4), make_segment(7, OddClass::Plus));
  auto cfg = recognize_segment_config(good, good.all());
  REQUIRE(cfg.has_value());
  CHECK(*cfg == SegmentConfig({{4, OddClass::None}, {7, OddClass::Plus}}));

  CHECK_FALSE(recognize_segment_config(make_cycle(6), make_cycle(6).all()).has_value());
  GameGraph lonely(1, {Color::L}, {});
  CHECK_FALSE(recognize_segment_config(lonely, lonely.all()).has_value());
  GameGraph wrong_way(2, {Color::R, Color::L}, {{0, 1}});
  CHECK_FALSE(recognize_segment_config(wrong_way, wrong_way.all()).has_value());
  GameGraph both_ways(2, {Color::L, Color::R}, {{0, 1}, {1, 0}});
  CHECK_FALSE(recognize_segment_config(both_ways, both_ways.all()).has_value());
  GameGraph same_colors(2, {Color::L, Color::L}, {{0, 1}});
  CHECK_FALSE(recognize_segment_config(same_colors, same_colors.all()).has_value());

  // Recognition on a subposition.
  GameGraph seg = make_segment(9, OddClass::Minus);
  Position p(seg);
  Position child = p.apply_move(Color::L, 3, Mode::Relevant); // cutting move
  auto sub = recognize_segment_config(seg, child.alive());
  REQUIRE(sub.has_value());
  CHECK(sub->segments().size() == 2);
}

TEST_CASE("conjecture probe is report-only") {
  VerifyReport rep = probe_conjectures(12);
  CHECK_FALSE(rep.hard_fail());
  CHECK(rep.count(ClaimStatus::Report) == rep.claims.size());
}
