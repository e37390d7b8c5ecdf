#pragma once

#include <cstdint>

#include "influence/graph.hpp"

namespace influence {

// Deterministic generator with a stable cross-platform output stream, so
// seeded suites reproduce byte-identical reports everywhere.
class SplitMix64 {
public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). n must be positive; modulo bias is irrelevant here.
  uint64_t below(uint64_t n) { return next() % n; }
  int range(int lo, int hi) { return lo + static_cast<int>(below(hi - lo + 1)); }
  bool chance(uint32_t num, uint32_t den) { return below(den) < num; }

private:
  uint64_t state_;
};

// Random digraph with n vertices, per-arc probability num/den, uniform colors.
GameGraph random_digraph(SplitMix64 &rng, int n, uint32_t num, uint32_t den);

// Random nonempty relevant graph with at most max_n vertices: sample, strip
// forced vertices, re-densify, resample when nothing survives.
GameGraph random_relevant_graph(SplitMix64 &rng, int max_n);

} // namespace influence
