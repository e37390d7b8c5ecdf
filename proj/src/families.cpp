#include "influence/families.hpp"

#include <string>

namespace influence {

GameGraph make_segment(int n, OddClass cls) {
  SegmentDescriptor d(n, n % 2 == 0 ? OddClass::None : cls); // validates
  if (n % 2 != 0 && cls == OddClass::None)
    throw std::invalid_argument("odd segment needs an endpoint class");
  if (n % 2 == 0 && cls != OddClass::None)
    throw std::invalid_argument("even segment takes no endpoint class");
  std::vector<Color> colors(n);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) colors[i] = segment_color_at(d, i + 1);
  for (int i = 0; i < n; ++i) {
    if (colors[i] != Color::L) continue;
    if (i > 0) arcs.push_back({i, i - 1});
    if (i + 1 < n) arcs.push_back({i, i + 1});
  }
  return GameGraph(n, std::move(colors), std::move(arcs));
}

GameGraph make_segment(int n) {
  return make_segment(n, n % 2 == 0 ? OddClass::None : OddClass::Minus);
}

GameGraph make_cycle(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("alternating cycles need an even size >= 4, got " +
                                std::to_string(n));
  GameGraph seg = make_segment(n, OddClass::None);
  std::vector<Color> colors(n);
  for (int v = 0; v < n; ++v) colors[v] = seg.color(v);
  std::vector<Arc> arcs = seg.arcs();
  // Close the path: the L endpoint captures the R endpoint as well.
  int l_end = colors[0] == Color::L ? 0 : n - 1;
  int r_end = n - 1 - l_end;
  arcs.push_back({l_end, r_end});
  return GameGraph(n, std::move(colors), std::move(arcs));
}

GameGraph make_tree(const TreeSpec &spec) {
  if (spec.depth < 0 || spec.fanout < 1)
    throw std::invalid_argument("tree spec needs depth >= 0 and fanout >= 1");
  std::vector<Color> colors;
  std::vector<Arc> arcs;
  std::vector<int> level{0};
  colors.push_back(Color::L);
  for (int k = 0; k <= spec.depth; ++k) {
    int kids = k < spec.depth ? 3 : spec.fanout;
    Color kid_color = k < spec.depth ? Color::L : Color::R;
    std::vector<int> next;
    next.reserve(level.size() * kids);
    for (int parent : level) {
      for (int j = 0; j < kids; ++j) {
        int id = static_cast<int>(colors.size());
        colors.push_back(kid_color);
        arcs.push_back({parent, id});
        next.push_back(id);
      }
    }
    level = std::move(next);
  }
  int n = static_cast<int>(colors.size());
  return GameGraph(n, std::move(colors), std::move(arcs));
}

GameGraph make_j(const TreeSpec &spec) {
  GameGraph t = make_tree(spec);
  return disjoint_sum(t, t);
}

GameGraph materialize(const SegmentConfig &config) {
  GameGraph g(0, {}, {});
  for (const SegmentDescriptor &d : config.segments())
    g = disjoint_sum(g, make_segment(d.length, d.cls));
  return g;
}

GameGraph make_quasi_path(const QuasiPathSpec &spec) {
  int n = static_cast<int>(spec.colors.size());
  if (n < 1) throw std::invalid_argument("quasi-path needs at least one vertex");
  if (spec.forward.size() + 1 != spec.colors.size())
    throw std::invalid_argument("quasi-path needs one orientation per edge");
  std::vector<Arc> arcs;
  arcs.reserve(spec.forward.size());
  for (int i = 0; i + 1 < n; ++i) {
    if (spec.forward[i]) {
      arcs.push_back({i, i + 1});
    } else {
      arcs.push_back({i + 1, i});
    }
  }
  GameGraph g(n, spec.colors, std::move(arcs));
  if (!Position(g).is_relevant())
    throw NonRelevantSpecError("quasi-path spec has forced vertices");
  return g;
}

QuasiPathSample random_quasi_path(SplitMix64 &rng, int length) {
  if (length < 2) throw std::invalid_argument("relevant quasi-paths need length >= 2");
  QuasiPathSample sample;
  while (true) {
    QuasiPathSpec spec;
    spec.colors.resize(length);
    spec.forward.resize(length - 1);
    for (int i = 0; i < length; ++i)
      spec.colors[i] = rng.chance(1, 2) ? Color::L : Color::R;
    for (int i = 0; i + 1 < length; ++i) spec.forward[i] = rng.chance(1, 2);
    try {
      sample.graph = make_quasi_path(spec);
      sample.spec = std::move(spec);
      return sample;
    } catch (const NonRelevantSpecError &) {
      ++sample.rejections;
    }
  }
}

GameGraph random_quasi_path_collection(SplitMix64 &rng, int total_max, int max_paths,
                                       uint64_t *rejections) {
  if (total_max < 2) throw std::invalid_argument("collection budget too small");
  int paths = rng.range(1, max_paths);
  GameGraph g(0, {}, {});
  uint64_t rejected = 0;
  for (int i = 0; i < paths; ++i) {
    int budget = total_max - g.size();
    if (budget < 2) break;
    QuasiPathSample s = random_quasi_path(rng, rng.range(2, budget));
    rejected += s.rejections;
    g = disjoint_sum(g, s.graph);
  }
  if (rejections) *rejections = rejected;
  return g;
}

} // namespace influence
