#pragma once

#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "influence/graph.hpp"
#include "influence/report.hpp"
#include "influence/solver.hpp"

namespace influence {

// Parity/majority class of a single alternating path. Even lengths have one
// endpoint of each color; odd lengths have either two R endpoints (Minus,
// R-majority) or two L endpoints (Plus, L-majority).
enum class OddClass : uint8_t { None, Minus, Plus };

std::string to_string(OddClass c);

struct SegmentDescriptor {
  int length = 2;
  OddClass cls = OddClass::None;

  SegmentDescriptor() = default;
  SegmentDescriptor(int length, OddClass cls); // validates length/class parity
  friend auto operator<=>(const SegmentDescriptor &, const SegmentDescriptor &) = default;
};

// Color of 1-based position p within a segment of the given class. Minus
// segments start (and end) on R, Plus on L; even segments use the R-first
// reading, which is the same graph as L-first read backwards.
Color segment_color_at(const SegmentDescriptor &d, int pos);

// Which game class a union of segments falls into.
enum class ConfigClass : uint8_t { Equal, Plus, Minus, Mixed };

// Order-independent multiset of segments; the canonical key for the
// specialized solver's memo.
class SegmentConfig {
public:
  SegmentConfig() = default;
  explicit SegmentConfig(std::vector<SegmentDescriptor> segments);

  const std::vector<SegmentDescriptor> &segments() const { return segments_; }
  bool empty() const { return segments_.empty(); }
  int total_size() const;
  int count(Color c) const;
  // Equal when all lengths are even; Plus/Minus when exactly one is odd and
  // the color majority matches; Mixed otherwise.
  ConfigClass classify() const;

  friend bool operator==(const SegmentConfig &, const SegmentConfig &) = default;

  std::string to_string() const;

private:
  std::vector<SegmentDescriptor> segments_; // sorted
};

// Removal size and shape of one move inside a segment configuration: border
// moves consume an endpoint, the k=3 interior split is the cutting move.
struct MoveClass {
  int k = 0;
  bool cutting = false;
};

// Classification of playing 1-based position `pos` of segment `seg_index`,
// counting the forced vertices the move leaves behind.
MoveClass classify_move(const SegmentConfig &config, int seg_index, int pos);

// Exact relative scores for unions of segments, memoized on the canonical
// multiset so every subposition is shared across queries.
class SegmentEngine {
public:
  struct Options {
    // Skip endpoint moves on segments of size >= 4 (they are contained in a
    // larger move on the same segment).
    bool restrict_two_moves = true;
    // Drop zero-game pairs before memoizing: two equal even segments, or a
    // Minus/Plus pair of equal odd length, are a game plus its negative and
    // cannot shift either score.
    bool milnor_cancel = true;
    // Solve only one of each config/negative pair; the other side's scores
    // are the negated swap.
    bool negation_fold = true;
    // Materialize every expanded move and check it against the graph-level
    // removal-set computation. Slow; for verification runs.
    bool cross_check = false;
  };

  SegmentEngine();
  explicit SegmentEngine(Options opts);

  // Entry points serialize on an internal mutex, so one engine can back
  // several sequentially-queried suites.
  RelScores solve(const SegmentConfig &config);
  ScoreQuad quad(const SegmentConfig &config);
  uint64_t memo_entries() const { return memo_.size(); }

private:
  using Key = std::vector<int32_t>;
  struct KeyHash {
    size_t operator()(const Key &k) const;
  };

  RelScores solve_packed(Key key);

  Options opts_;
  std::mutex mu_;
  std::unordered_map<Key, RelScores, KeyHash> memo_;
};

RelScores solve_segment_config(const SegmentConfig &config);

// Process-wide engine with default options; table and score queries share
// one memo.
SegmentEngine &shared_segment_engine();

struct SegmentTableRow {
  int n = 0;
  int ls = 0;
  int rs = 0;
};

// Scores of single segments for n = 1..max_n. Odd lengths default to the
// Minus class; n = 1 is scored as the single-vertex convention rather than as
// a segment. Rows stream through `row_cb` as they are computed when given.
std::vector<SegmentTableRow> segment_table(
    int max_n, OddClass odd_class = OddClass::Minus,
    const std::function<void(const SegmentTableRow &)> &row_cb = nullptr);

// Report-only consistency probe of the open periodicity questions over
// n = 1..max_n: candidate periods, the residue-class score patterns, and the
// rare score pairs that break them.
VerifyReport probe_conjectures(int max_n);

// Recognizes the subgraph induced by `alive` as a disjoint union of
// segments, if it is one.
std::optional<SegmentConfig> recognize_segment_config(const GameGraph &g,
                                                      const VertexSet &alive);

} // namespace influence
