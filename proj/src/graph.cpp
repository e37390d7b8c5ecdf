#include "influence/graph.hpp"

#include <algorithm>

namespace influence {

GameGraph::GameGraph(int n, std::vector<Color> colors, std::vector<Arc> arcs)
    : n_(n), colors_(std::move(colors)), arcs_(std::move(arcs)) {
  if (n_ < 0) throw GraphError("vertex count must be non-negative");
  if (static_cast<int>(colors_.size()) != n_)
    throw GraphError("color list size must equal vertex count");
  for (const Arc &a : arcs_) {
    if (a.from < 0 || a.from >= n_ || a.to < 0 || a.to >= n_)
      throw GraphError("arc endpoint out of range: " + std::to_string(a.from) +
                       "->" + std::to_string(a.to));
    if (a.from == a.to)
      throw GraphError("self-loop at vertex " + std::to_string(a.from));
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());

  out_.assign(n_, VertexSet(n_));
  in_.assign(n_, VertexSet(n_));
  lmask_ = VertexSet(n_);
  rmask_ = VertexSet(n_);
  for (const Arc &a : arcs_) {
    out_[a.from].set(a.to);
    in_[a.to].set(a.from);
  }
  for (int v = 0; v < n_; ++v) {
    (colors_[v] == Color::L ? lmask_ : rmask_).set(v);
  }
}

GameGraph negative(const GameGraph &g) {
  std::vector<Color> colors(g.size());
  for (int v = 0; v < g.size(); ++v) colors[v] = opposite(g.color(v));
  std::vector<Arc> arcs;
  arcs.reserve(g.arcs().size());
  for (const Arc &a : g.arcs()) arcs.push_back({a.to, a.from});
  return GameGraph(g.size(), std::move(colors), std::move(arcs));
}

GameGraph disjoint_sum(const GameGraph &g1, const GameGraph &g2) {
  int n1 = g1.size();
  std::vector<Color> colors;
  colors.reserve(n1 + g2.size());
  for (int v = 0; v < n1; ++v) colors.push_back(g1.color(v));
  for (int v = 0; v < g2.size(); ++v) colors.push_back(g2.color(v));
  std::vector<Arc> arcs = g1.arcs();
  arcs.reserve(arcs.size() + g2.arcs().size());
  for (const Arc &a : g2.arcs()) arcs.push_back({a.from + n1, a.to + n1});
  return GameGraph(n1 + g2.size(), std::move(colors), std::move(arcs));
}

GameGraph induced_subgraph(const GameGraph &g, const VertexSet &keep,
                           std::vector<int> *old_ids) {
  std::vector<int> olds = keep.to_vector();
  std::vector<int> dense(g.size(), -1);
  for (size_t i = 0; i < olds.size(); ++i) dense[olds[i]] = static_cast<int>(i);
  std::vector<Color> colors;
  colors.reserve(olds.size());
  for (int v : olds) colors.push_back(g.color(v));
  std::vector<Arc> arcs;
  for (const Arc &a : g.arcs()) {
    if (keep.test(a.from) && keep.test(a.to))
      arcs.push_back({dense[a.from], dense[a.to]});
  }
  if (old_ids) *old_ids = olds;
  return GameGraph(static_cast<int>(olds.size()), std::move(colors), std::move(arcs));
}

std::vector<VertexSet> weak_components(const GameGraph &g, const VertexSet &within) {
  std::vector<int> parent(g.size());
  for (int v = 0; v < g.size(); ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Arc &a : g.arcs()) {
    if (within.test(a.from) && within.test(a.to)) parent[find(a.from)] = find(a.to);
  }
  std::vector<VertexSet> comps;
  std::vector<int> slot(g.size(), -1);
  within.for_each([&](int v) {
    int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(comps.size());
      comps.emplace_back(g.size());
    }
    comps[slot[r]].set(v);
  });
  return comps;
}

void Position::check_alive(int v) const {
  if (!is_alive(v))
    throw InvalidVertexError("vertex " + std::to_string(v) +
                             " is not alive in this position");
}

VertexSet reach_within(const GameGraph &g, const VertexSet &alive, int v, bool forward) {
  VertexSet seen(g.size());
  seen.set(v);
  std::vector<int> work{v};
  while (!work.empty()) {
    int u = work.back();
    work.pop_back();
    VertexSet fresh = (forward ? g.out(u) : g.in(u)) & alive;
    fresh -= seen;
    fresh.for_each([&](int w) {
      seen.set(w);
      work.push_back(w);
    });
  }
  return seen;
}

VertexSet Position::succ_closure(int v) const {
  check_alive(v);
  return reach_within(*base_, alive_, v, true);
}

VertexSet Position::pred_closure(int v) const {
  check_alive(v);
  return reach_within(*base_, alive_, v, false);
}

std::pair<VertexSet, VertexSet> Position::forced_sets() const {
  VertexSet forcedL(base_->size()), forcedR(base_->size());
  VertexSet raliv = alive_ & base_->mask(Color::R);
  VertexSet laliv = alive_ & base_->mask(Color::L);
  laliv.for_each([&](int v) {
    if (!succ_closure(v).intersects(raliv)) forcedL.set(v);
  });
  raliv.for_each([&](int v) {
    if (!pred_closure(v).intersects(laliv)) forcedR.set(v);
  });
  return {forcedL, forcedR};
}

bool Position::is_relevant() const {
  auto [fl, fr] = forced_sets();
  return fl.empty() && fr.empty();
}

Position Position::relevant_reduce() const {
  Position cur = *this;
  while (true) {
    auto [fl, fr] = cur.forced_sets();
    if (fl.empty() && fr.empty()) return cur;
    cur.creditL_ += fl.count();
    cur.creditR_ += fr.count();
    cur.alive_ -= fl;
    cur.alive_ -= fr;
  }
}

RemovalSet Position::rmv(int v) const {
  check_alive(v);
  if (!is_relevant())
    throw ContractViolation("rmv requires a relevant position");
  Color mover = base_->color(v);
  VertexSet closed = closure(mover, v);
  Position rest(*base_, alive_ - closed);
  auto [fl, fr] = rest.forced_sets();
  VertexSet forced = fl | fr;
  RemovalSet rs;
  rs.vertices = closed | forced;
  rs.byPlayer = mover;
  rs.withForced = forced.any();
  return rs;
}

VertexSet Position::rmv_by_containment(int v) const {
  check_alive(v);
  if (!is_relevant())
    throw ContractViolation("rmv requires a relevant position");
  Color mover = base_->color(v);
  VertexSet own = alive_ & base_->mask(mover);
  VertexSet other = alive_ - own;
  VertexSet moved = closure(mover, v);
  VertexSet result(base_->size());
  alive_.for_each([&](int z) {
    VertexSet cz = closure(mover, z);
    cz &= other;
    if (cz.is_subset_of(moved)) result.set(z);
  });
  return result;
}

Position Position::apply_move(Color mover, int v, Mode mode) const {
  check_alive(v);
  if (base_->color(v) != mover)
    throw IllegalMoveError("vertex " + std::to_string(v) + " is not a " +
                           color_char(mover) + (" vertex"));
  if (mode == Mode::Raw) {
    return Position(*base_, alive_ - closure(mover, v), creditL_, creditR_);
  }
  RemovalSet rs = rmv(v);
  VertexSet forced = rs.vertices - closure(mover, v);
  if (forced.intersects(base_->mask(opposite(mover))))
    throw ContractViolation("forced vertices after a move must belong to the mover");
  int cl = creditL_, cr = creditR_;
  (mover == Color::L ? cl : cr) += forced.count();
  return Position(*base_, alive_ - rs.vertices, cl, cr);
}

std::vector<int> Position::dominant_moves(Color mover) const {
  if (!is_relevant())
    throw ContractViolation("dominant_moves requires a relevant position");
  std::vector<int> ids = alive_of(mover).to_vector();
  std::vector<VertexSet> rmvs;
  std::vector<int> csize;
  rmvs.reserve(ids.size());
  csize.reserve(ids.size());
  for (int v : ids) {
    csize.push_back(closure(mover, v).count());
    rmvs.push_back(rmv(v).vertices);
  }
  return filter_dominated(ids, rmvs, csize);
}

std::vector<int> filter_dominated(const std::vector<int> &ids,
                                  std::span<const VertexSet> rmvs,
                                  std::span<const int> closure_sizes) {
  std::vector<int> kept;
  for (size_t i = 0; i < ids.size(); ++i) {
    bool beaten = false;
    for (size_t j = 0; j < ids.size() && !beaten; ++j) {
      if (j == i || !rmvs[j].test(ids[i])) continue;
      if (!rmvs[i].test(ids[j])) {
        beaten = true; // strict containment
      } else if (closure_sizes[j] != closure_sizes[i]) {
        beaten = closure_sizes[j] > closure_sizes[i];
      } else {
        beaten = ids[j] < ids[i]; // equivalent moves: keep the lowest id
      }
    }
    if (!beaten) kept.push_back(ids[i]);
  }
  return kept;
}

} // namespace influence
