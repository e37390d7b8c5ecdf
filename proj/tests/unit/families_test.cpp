#include <doctest.h>

#include "influence/families.hpp"
#include "influence/random.hpp"
#include "influence/solver.hpp"

using namespace influence;

TEST_CASE("segment generation matches the defining pattern") {
  GameGraph g = make_segment(5, OddClass::Minus);
  CHECK(g.size() == 5);
  CHECK(g.color(0) == Color::R);
  CHECK(g.color(1) == Color::L);
  CHECK(g.arcs() == std::vector<Arc>{{1, 0}, {1, 2}, {3, 2}, {3, 4}});

  GameGraph two = make_segment(2);
  CHECK(two.count(Color::L) == 1);
  CHECK(two.count(Color::R) == 1);
  CHECK(two.arcs().size() == 1);

  GameGraph plus = make_segment(5, OddClass::Plus);
  CHECK(plus.count(Color::L) - plus.count(Color::R) == 1);
  CHECK(Position(plus).is_relevant());
}

TEST_CASE("cycle generation closes an even path") {
  CHECK_THROWS_AS(make_cycle(5), std::invalid_argument);
  CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
  for (int n : {4, 6, 10}) {
    GameGraph g = make_cycle(n);
    CHECK(g.size() == n);
    CHECK(g.arcs().size() == static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      if (g.color(v) == Color::L) {
        CHECK(g.out(v).count() == 2);
        CHECK(g.in(v).count() == 0);
      } else {
        CHECK(g.in(v).count() == 2);
        CHECK(g.out(v).count() == 0);
      }
    }
    CHECK(Position(g).is_relevant());
  }
}

TEST_CASE("tree generation: vertex counts per level") {
  GameGraph star = make_tree({0, 3});
  CHECK(star.size() == 4);
  CHECK(star.count(Color::L) == 1);
  CHECK(star.count(Color::R) == 3);

  GameGraph t24 = make_tree({2, 4});
  CHECK(t24.size() == 49); // 13 internal + 36 leaves
  CHECK(t24.count(Color::L) == 13);
  CHECK(t24.count(Color::R) == 36);
  CHECK(Position(t24).is_relevant());

  for (int n = 0; n <= 4; ++n) {
    for (int c = 1; c <= 5; ++c) {
      GameGraph t = make_tree({n, c});
      int internal = 0, pow = 1;
      for (int k = 0; k <= n; ++k) {
        internal += pow;
        pow *= 3;
      }
      CHECK(t.size() == internal + c * (pow / 3));
      CHECK(t.arcs().size() == static_cast<size_t>(t.size() - 1));
    }
  }

  GameGraph j = make_j({1, 2});
  CHECK(j.size() == 2 * make_tree({1, 2}).size());
  CHECK(weak_components(j, j.all()).size() == 2);
  CHECK_THROWS_AS(make_tree({-1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_tree({1, 0}), std::invalid_argument);
}

TEST_CASE("quasi-path specs reject forced vertices") {
  // Alternating colors, all arcs from L: an ordinary segment.
  QuasiPathSpec seg{{Color::R, Color::L, Color::R, Color::L},
                    {false, true, false}};
  GameGraph g = make_quasi_path(seg);
  CHECK(Position(g).is_relevant());
  CHECK(g.arcs().size() == 3);

  CHECK_THROWS_AS(make_quasi_path({{Color::L}, {}}), NonRelevantSpecError);
  CHECK_THROWS_AS(make_quasi_path({{Color::R, Color::R, Color::R}, {true, true}}),
                  NonRelevantSpecError);
  CHECK_THROWS_AS(make_quasi_path({{Color::L, Color::R}, {true, false}}),
                  std::invalid_argument); // orientation count mismatch
}

TEST_CASE("random quasi-paths are relevant and deterministic per seed") {
  SplitMix64 a(42), b(42);
  QuasiPathSample s1 = random_quasi_path(a, 9);
  QuasiPathSample s2 = random_quasi_path(b, 9);
  CHECK(s1.graph == s2.graph);
  CHECK(s1.rejections == s2.rejections);
  CHECK(Position(s1.graph).is_relevant());

  SplitMix64 rng(7);
  for (int i = 0; i < 30; ++i) {
    uint64_t rejections = 0;
    GameGraph c = random_quasi_path_collection(rng, 16, 3, &rejections);
    CHECK(c.size() <= 16);
    CHECK(c.size() >= 2);
    CHECK(Position(c).is_relevant());
    for (const VertexSet &comp : weak_components(c, c.all())) {
      // Underlying path: all degrees at most two.
      comp.for_each([&](int v) { CHECK(((c.out(v) | c.in(v)) & comp).count() <= 2); });
    }
  }
}

TEST_CASE("materialized configs concatenate segments in canonical order") {
  SegmentConfig cfg({{3, OddClass::Plus}, {2, OddClass::None}});
  GameGraph g = materialize(cfg);
  CHECK(g.size() == 5);
  auto back = recognize_segment_config(g, g.all());
  REQUIRE(back.has_value());
  CHECK(*back == cfg);
}
