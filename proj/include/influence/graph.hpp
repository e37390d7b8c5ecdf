#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "influence/bitset.hpp"

namespace influence {

// Vertex owner: Left captures forward (successor) closures, Right captures
// backward (predecessor) closures.
enum class Color : uint8_t { L, R };

inline Color opposite(Color c) { return c == Color::L ? Color::R : Color::L; }
inline char color_char(Color c) { return c == Color::L ? 'L' : 'R'; }

enum class Mode : uint8_t {
  Raw,      // a move removes the plain reachability closure
  Relevant, // a move also removes the vertices it leaves forced, crediting them
};

struct Arc {
  int from = 0;
  int to = 0;
  friend auto operator<=>(const Arc &, const Arc &) = default;
};

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidVertexError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct IllegalMoveError : std::logic_error {
  using std::logic_error::logic_error;
};
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};
struct NoMoveError : std::logic_error {
  using std::logic_error::logic_error;
};

// Immutable colored digraph with dense vertex ids 0..n-1. Arcs are stored
// sorted and deduplicated; self-loops are rejected. Safe to share across
// threads after construction.
class GameGraph {
public:
  GameGraph() = default;
  GameGraph(int n, std::vector<Color> colors, std::vector<Arc> arcs);

  int size() const { return n_; }
  Color color(int v) const { return colors_[v]; }
  const std::vector<Arc> &arcs() const { return arcs_; }
  const VertexSet &out(int v) const { return out_[v]; }
  const VertexSet &in(int v) const { return in_[v]; }
  const VertexSet &mask(Color c) const { return c == Color::L ? lmask_ : rmask_; }
  VertexSet all() const { return VertexSet::full(n_); }
  int count(Color c) const { return mask(c).count(); }

  bool operator==(const GameGraph &o) const {
    return n_ == o.n_ && colors_ == o.colors_ && arcs_ == o.arcs_;
  }

private:
  int n_ = 0;
  std::vector<Color> colors_;
  std::vector<Arc> arcs_;
  std::vector<VertexSet> out_, in_;
  VertexSet lmask_, rmask_;
};

// Color swap plus arc reversal. An involution up to arc order.
GameGraph negative(const GameGraph &g);

// Disjoint union; the second operand's ids are shifted by g1.size().
GameGraph disjoint_sum(const GameGraph &g1, const GameGraph &g2);

// Subgraph induced by `keep`, re-densified in ascending id order. When
// `old_ids` is given it receives the new-to-old id mapping.
GameGraph induced_subgraph(const GameGraph &g, const VertexSet &keep,
                           std::vector<int> *old_ids = nullptr);

// Connected components of the underlying undirected graph, restricted to
// `within`.
std::vector<VertexSet> weak_components(const GameGraph &g, const VertexSet &within);

// What one move removes: the mover's closure plus any vertices left forced.
struct RemovalSet {
  VertexSet vertices;
  Color byPlayer = Color::L;
  bool withForced = false; // true when the forced part is nonempty
};

// A live subposition of a base graph: the alive subset plus the vertex counts
// already banked from forced removals. All game operations act on the
// subgraph induced by the alive set. Small value type, cheap to copy.
class Position {
public:
  explicit Position(const GameGraph &g)
      : base_(&g), alive_(VertexSet::full(g.size())) {}
  Position(const GameGraph &g, VertexSet alive, int creditL = 0, int creditR = 0)
      : base_(&g), alive_(std::move(alive)), creditL_(creditL), creditR_(creditR) {}

  const GameGraph &graph() const { return *base_; }
  const VertexSet &alive() const { return alive_; }
  int alive_count() const { return alive_.count(); }
  bool is_alive(int v) const {
    return v >= 0 && v < base_->size() && alive_.test(v);
  }
  int credit(Color c) const { return c == Color::L ? creditL_ : creditR_; }
  VertexSet alive_of(Color c) const { return alive_ & base_->mask(c); }

  // Forward reachability from v in the induced subgraph, inclusive of v.
  VertexSet succ_closure(int v) const;
  // Backward reachability, inclusive of v.
  VertexSet pred_closure(int v) const;
  // succ for Left movers, pred for Right movers.
  VertexSet closure(Color mover, int v) const {
    return mover == Color::L ? succ_closure(v) : pred_closure(v);
  }

  // Vertices guaranteed to their owner: Left vertices whose successor closure
  // stays in L, and symmetrically for Right.
  std::pair<VertexSet, VertexSet> forced_sets() const;
  bool is_relevant() const;

  // Removes forced vertices (banking them as credits) until none remain.
  // Idempotent.
  Position relevant_reduce() const;

  // The removal set of playing v: closure(v) plus the vertices it leaves
  // forced. Requires a relevant position.
  RemovalSet rmv(int v) const;
  // Same set, via the containment characterization {z : closure(z) subset of
  // ownColor union closure(v)}. Kept as an independent route for checking.
  VertexSet rmv_by_containment(int v) const;

  Position apply_move(Color mover, int v, Mode mode) const;

  // Moves worth searching: candidates not contained in another same-color
  // move's removal set. Contains at least one optimal move. Requires a
  // relevant position; result is in ascending id order.
  std::vector<int> dominant_moves(Color mover) const;

private:
  void check_alive(int v) const;

  const GameGraph *base_ = nullptr;
  VertexSet alive_;
  int creditL_ = 0;
  int creditR_ = 0;
};

// Shared dominated-move filter: candidate i is dropped when some candidate j
// has ids[i] in rmv[j] and is not itself beaten back (ties broken by larger
// plain closure, then lower id). Returns kept ids in ascending order.
std::vector<int> filter_dominated(const std::vector<int> &ids,
                                  std::span<const VertexSet> rmvs,
                                  std::span<const int> closure_sizes);

// Worklist reachability closure of v restricted to `alive`, inclusive of v.
// Forward follows arcs, backward reverses them.
VertexSet reach_within(const GameGraph &g, const VertexSet &alive, int v, bool forward);

} // namespace influence
