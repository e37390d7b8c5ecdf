#include <doctest.h>

#include "influence/families.hpp"
#include "influence/graph_io.hpp"
#include "influence/random.hpp"
#include "influence/suites.hpp"

using namespace influence;

TEST_CASE("parse a canonical document") {
  std::string text =
      "influence v1\n"
      "# a three-vertex chain\n"
      "v 0 L\n"
      "v 1 R\n"
      "v 2 R\n"
      "a 0 1\n"
      "a 1 2\n";
  GraphDoc doc = parse_graph(text);
  CHECK(doc.graph.size() == 3);
  CHECK(doc.graph.color(0) == Color::L);
  CHECK(doc.graph.arcs().size() == 2);
  CHECK(doc.warnings.empty());
}

TEST_CASE("sparse ids re-densify and record the mapping") {
  GraphDoc doc = parse_graph("influence v1\nv 10 L\nv 3 R\nv 700 R\na 10 3\na 10 700\n");
  CHECK(doc.graph.size() == 3);
  CHECK(doc.original_ids == std::vector<long long>{3, 10, 700});
  CHECK(doc.dense_id(700) == 2);
  CHECK(doc.dense_id(4) == -1);
  CHECK(doc.graph.color(1) == Color::L);
  CHECK(doc.graph.arcs() == std::vector<Arc>{{1, 0}, {1, 2}});
}

TEST_CASE("serialization round-trips bit-exactly") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    GameGraph g = random_digraph(rng, 1 + static_cast<int>(rng.below(14)), 1, 3);
    std::string text = serialize_graph(g);
    GraphDoc doc = parse_graph(text);
    CHECK(doc.graph == g);
    CHECK(serialize_graph(doc.graph) == text);
  }
  // Non-canonical input settles after one pass.
  GraphDoc doc = parse_graph("influence v1\nv 5 R\nv 2 L\na 2 5\n");
  std::string once = serialize_graph(doc.graph);
  CHECK(serialize_graph(parse_graph(once).graph) == once);
}

TEST_CASE("diagnostics carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_graph("influence v1\nv 0 L\nv 1 L\na 1 1\n"),
                       doctest::Contains("self-loop at line 4"), ParseError);
  try {
    parse_graph("influence v1\nv 0 X\n");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line == 2);
    CHECK(e.column == 5);
  }
  CHECK_THROWS_AS(parse_graph("graph v1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
  CHECK_THROWS_AS(parse_graph("influence v1\nv 0 L\nv 0 R\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("influence v1\nv 0 L\na 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("influence v1\nw 0 L\n"), ParseError);
}

TEST_CASE("duplicate arcs warn and collapse") {
  GraphDoc doc = parse_graph("influence v1\nv 0 L\nv 1 R\na 0 1\na 0 1\n");
  CHECK(doc.graph.arcs().size() == 1);
  REQUIRE(doc.warnings.size() == 1);
  CHECK(doc.warnings[0].find("duplicate arc") != std::string::npos);
}

TEST_CASE("dot export marks the two sides") {
  std::string dot = to_dot(figure_one());
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("fillcolor=black") != std::string::npos);
  CHECK(dot.find("0 -> 2;") != std::string::npos);
}
