#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "influence/graph.hpp"
#include "influence/report.hpp"

namespace influence {

class SegmentEngine;

// The four absolute scores of a position: best vertex count for Left/Right
// when moving first (1) or second (2).
struct ScoreQuad {
  int32_t sL1 = 0;
  int32_t sL2 = 0;
  int32_t sR1 = 0;
  int32_t sR2 = 0;
  friend bool operator==(const ScoreQuad &, const ScoreQuad &) = default;
};

struct RelScores {
  int32_t ls = 0;
  int32_t rs = 0;
  friend bool operator==(const RelScores &, const RelScores &) = default;
};

inline RelScores rel_of(const ScoreQuad &q) { return {q.sL1 - q.sR2, q.sL2 - q.sR1}; }

struct SolveOptions {
  Mode mode = Mode::Relevant;
  bool pruning = true;       // drop dominated moves (relevant mode only)
  bool parallel_root = false; // evaluate root moves on worker threads
  bool audit = false;        // assert game invariants on every memo entry
  // Answer positions recognized as pure segment unions from the specialized
  // segment solver (relevant mode only). Off by default so the general
  // search stays an independent route against that solver.
  bool segment_routing = false;
};

struct MemoStats {
  uint64_t entries = 0;
  uint64_t hits = 0;
  uint64_t misses = 0;
};

struct AuditError : std::logic_error {
  using std::logic_error::logic_error;
};

// Transposition table keyed by alive set. Entries never change once written;
// concurrent duplicate evaluation is allowed because writes are idempotent.
class MemoTable {
public:
  bool lookup(const VertexSet &key, ScoreQuad &out);
  void insert(const VertexSet &key, const ScoreQuad &q);
  MemoStats stats() const;

private:
  static constexpr int kShards = 16;
  struct Shard {
    std::mutex mu;
    std::unordered_map<VertexSet, ScoreQuad, VertexSetHash> map;
  };
  std::array<Shard, kShards> shards_;
  std::atomic<uint64_t> hits_{0}, misses_{0};
};

// Exact solver for one base graph. Results are deterministic and independent
// of pruning, parallelism and mode; relevant-mode credits are folded back so
// both modes report the scores of the original game.
class Solver {
public:
  explicit Solver(const GameGraph &g, SolveOptions opts = {});
  ~Solver();

  ScoreQuad solve();
  // Scores of an alive subset played as a game of its own (credits start at
  // zero). In relevant mode the subset is reduced first and the stripped
  // vertices are folded back into the quad.
  ScoreQuad solve_position(const VertexSet &alive);

  MemoStats memo_stats() const { return memo_.stats(); }
  const SolveOptions &options() const { return opts_; }
  const GameGraph &graph() const { return *g_; }

private:
  struct Child {
    int vertex;
    int removed;
    VertexSet alive;
  };
  struct Frame;

  ScoreQuad search(const VertexSet &alive);
  ScoreQuad search_root_parallel(const VertexSet &alive);
  bool base_case(const VertexSet &alive, ScoreQuad &q) const;
  bool try_route(const VertexSet &alive, ScoreQuad &q);
  void expand(Frame &f) const;
  ScoreQuad finalize(const Frame &f) const;
  void audit_entry(const VertexSet &alive, const ScoreQuad &q) const;

  const GameGraph *g_;
  SolveOptions opts_;
  MemoTable memo_;
  std::unique_ptr<SegmentEngine> engine_;
  std::mutex engine_mu_;
};

ScoreQuad solve(const GameGraph &g, SolveOptions opts = {});
RelScores rel_scores(const GameGraph &g, SolveOptions opts = {});
// Ls - Rs; non-negative on every relevant graph.
int incentive(const GameGraph &g, SolveOptions opts = {});

struct BestMove {
  int vertex = -1;
  ScoreQuad after; // quad of the resulting position's alive set
};

// Optimal first move for `mover`, lowest vertex id among ties. Raw mode
// accepts any position; relevant mode requires a relevant one.
BestMove best_move(const Position &p, Color mover, SolveOptions opts = {});

// Milnor sum bounds for two relevant graphs: exact scores of g1, g2 and
// g1+g2 and the four inequality outcomes.
VerifyReport milnor_bounds_check(const GameGraph &g1, const GameGraph &g2,
                                 SolveOptions opts = {});

} // namespace influence
