#include "influence/random.hpp"

namespace influence {

GameGraph random_digraph(SplitMix64 &rng, int n, uint32_t num, uint32_t den) {
  std::vector<Color> colors(n);
  for (int v = 0; v < n; ++v) colors[v] = rng.chance(1, 2) ? Color::L : Color::R;
  std::vector<Arc> arcs;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && rng.chance(num, den)) arcs.push_back({a, b});
    }
  }
  return GameGraph(n, std::move(colors), std::move(arcs));
}

GameGraph random_relevant_graph(SplitMix64 &rng, int max_n) {
  while (true) {
    int n = rng.range(2, max_n);
    // Mix of sparse and dense instances.
    uint32_t num = static_cast<uint32_t>(rng.range(1, 4));
    GameGraph g = random_digraph(rng, n, num, static_cast<uint32_t>(n) + 2);
    Position reduced = Position(g).relevant_reduce();
    if (reduced.alive().empty()) continue;
    return induced_subgraph(g, reduced.alive());
  }
}

} // namespace influence
