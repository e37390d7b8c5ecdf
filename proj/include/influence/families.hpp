#pragma once

#include <cstdint>
#include <vector>

#include "influence/graph.hpp"
#include "influence/random.hpp"
#include "influence/segments.hpp"

namespace influence {

struct NonRelevantSpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Alternating path: ids 0..n-1 in path order, every L vertex pointing at its
// neighbors. Odd lengths take the requested endpoint class; n >= 2.
GameGraph make_segment(int n, OddClass cls);
// Odd lengths default to the Minus class.
GameGraph make_segment(int n);

// Even alternating cycle: an even segment closed by one arc from its L
// endpoint to its R endpoint. n even, n >= 4.
GameGraph make_cycle(int n);

// Oriented tree with branching 3 down to the last internal level, which fans
// out to `fanout` leaves. Internal vertices are L, leaves are R; ids in
// breadth-first order.
struct TreeSpec {
  int depth = 0;  // internal levels 0..depth
  int fanout = 1; // leaves per last-level vertex
};
GameGraph make_tree(const TreeSpec &spec);
// Two disjoint copies of make_tree(spec).
GameGraph make_j(const TreeSpec &spec);

// Concatenation of a configuration's segments, in canonical order, as one
// graph. Segment i occupies a contiguous id block.
GameGraph materialize(const SegmentConfig &config);

// A path in the underlying sense with arbitrary arc orientations and colors.
// forward[i] orients the edge between i and i+1.
struct QuasiPathSpec {
  std::vector<Color> colors;
  std::vector<bool> forward;
};

// Throws NonRelevantSpecError when the spec has forced vertices.
GameGraph make_quasi_path(const QuasiPathSpec &spec);

struct QuasiPathSample {
  GameGraph graph;
  QuasiPathSpec spec;
  uint64_t rejections = 0;
};

// Uniform colors and orientations, resampled until relevant.
QuasiPathSample random_quasi_path(SplitMix64 &rng, int length);

// Disjoint union of 1..max_paths random relevant quasi-paths with at most
// total_max vertices overall.
GameGraph random_quasi_path_collection(SplitMix64 &rng, int total_max, int max_paths,
                                       uint64_t *rejections = nullptr);

} // namespace influence
