#include "influence/solver.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <deque>
#include <thread>

#include "influence/segments.hpp"

namespace influence {

bool MemoTable::lookup(const VertexSet &key, ScoreQuad &out) {
  Shard &s = shards_[key.hash() % kShards];
  std::lock_guard<std::mutex> lock(s.mu);
  auto it = s.map.find(key);
  if (it == s.map.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return false;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  out = it->second;
  return true;
}

void MemoTable::insert(const VertexSet &key, const ScoreQuad &q) {
  Shard &s = shards_[key.hash() % kShards];
  std::lock_guard<std::mutex> lock(s.mu);
  auto [it, fresh] = s.map.emplace(key, q);
  if (!fresh && !(it->second == q))
    throw AuditError("conflicting scores recomputed for position " + key.to_string());
}

MemoStats MemoTable::stats() const {
  MemoStats st;
  for (const Shard &s : shards_) st.entries += s.map.size();
  st.hits = hits_.load();
  st.misses = misses_.load();
  return st;
}

struct Solver::Frame {
  explicit Frame(VertexSet a) : alive(std::move(a)) {}
  VertexSet alive;
  std::vector<Child> lkids, rkids;
  size_t next = 0;
  bool expanded = false;
  int32_t sL1 = INT32_MIN, sL2 = INT32_MAX, sR1 = INT32_MIN, sR2 = INT32_MAX;
};

Solver::Solver(const GameGraph &g, SolveOptions opts) : g_(&g), opts_(opts) {}
Solver::~Solver() = default;

bool Solver::base_case(const VertexSet &alive, ScoreQuad &q) const {
  int cnt = alive.count();
  if (cnt == 0) {
    q = {};
    return true;
  }
  bool has_l = alive.intersects(g_->mask(Color::L));
  bool has_r = alive.intersects(g_->mask(Color::R));
  if (has_l && has_r) return false;
  if (opts_.mode == Mode::Relevant)
    throw ContractViolation("one-sided position reached in relevant-mode search");
  if (!has_l) {
    q = {0, 0, cnt, cnt};
  } else {
    q = {cnt, cnt, 0, 0};
  }
  return true;
}

bool Solver::try_route(const VertexSet &alive, ScoreQuad &q) {
  if (!opts_.segment_routing || opts_.mode != Mode::Relevant) return false;
  auto cfg = recognize_segment_config(*g_, alive);
  if (!cfg) return false;
  RelScores rs;
  {
    std::lock_guard<std::mutex> lock(engine_mu_);
    if (!engine_) engine_ = std::make_unique<SegmentEngine>();
    rs = engine_->solve(*cfg);
  }
  int n = cfg->total_size();
  q = {static_cast<int32_t>((n + rs.ls) / 2), static_cast<int32_t>((n + rs.rs) / 2),
       static_cast<int32_t>((n - rs.rs) / 2), static_cast<int32_t>((n - rs.ls) / 2)};
  return true;
}

void Solver::expand(Frame &f) const {
  const GameGraph &g = *g_;
  int n = g.size();
  VertexSet lal = f.alive & g.mask(Color::L);
  VertexSet ral = f.alive & g.mask(Color::R);
  std::vector<VertexSet> table(n);
  auto gen = [&](Color mover, std::vector<Child> &kids) {
    const VertexSet &own = mover == Color::L ? lal : ral;
    const VertexSet &other = mover == Color::L ? ral : lal;
    bool forward = mover == Color::L;
    f.alive.for_each([&](int v) { table[v] = reach_within(g, f.alive, v, forward); });
    std::vector<int> ids = own.to_vector();
    std::vector<VertexSet> rmvs;
    std::vector<int> csize;
    rmvs.reserve(ids.size());
    csize.reserve(ids.size());
    for (int x : ids) {
      csize.push_back(table[x].count());
      if (opts_.mode == Mode::Raw) {
        rmvs.push_back(table[x]);
        continue;
      }
      // Containment characterization of the removal set: z goes when all of
      // z's opposite-color reach lies inside the mover's closure.
      VertexSet r(n);
      f.alive.for_each([&](int z) {
        if ((table[z] & other).is_subset_of(table[x])) r.set(z);
      });
      if (opts_.audit) {
        RemovalSet ref = Position(g, f.alive).rmv(x);
        if (!(ref.vertices == r))
          throw AuditError("removal-set characterizations disagree at vertex " +
                           std::to_string(x) + " in " + f.alive.to_string());
      }
      rmvs.push_back(std::move(r));
    }
    std::vector<int> use = ids;
    if (opts_.mode == Mode::Relevant && opts_.pruning)
      use = filter_dominated(ids, rmvs, csize);
    kids.reserve(use.size());
    for (int v : use) {
      size_t idx = std::lower_bound(ids.begin(), ids.end(), v) - ids.begin();
      kids.push_back({v, rmvs[idx].count(), f.alive - rmvs[idx]});
    }
    std::sort(kids.begin(), kids.end(), [](const Child &a, const Child &b) {
      return a.removed != b.removed ? a.removed > b.removed : a.vertex < b.vertex;
    });
  };
  gen(Color::L, f.lkids);
  gen(Color::R, f.rkids);
  if (f.lkids.empty() || f.rkids.empty())
    throw ContractViolation("two-sided position with no move for one player");
}

ScoreQuad Solver::finalize(const Frame &f) const {
  return {f.sL1, f.sL2, f.sR1, f.sR2};
}

void Solver::audit_entry(const VertexSet &alive, const ScoreQuad &q) const {
  int n = alive.count();
  auto fail = [&](const std::string &what) {
    throw AuditError(what + " violated at position " + alive.to_string() + " quad=(" +
                     std::to_string(q.sL1) + "," + std::to_string(q.sL2) + "," +
                     std::to_string(q.sR1) + "," + std::to_string(q.sR2) + ")");
  };
  if (q.sL1 + q.sR2 != n || q.sL2 + q.sR1 != n) fail("constant-sum");
  RelScores rs = rel_of(q);
  if ((rs.ls - n) % 2 != 0 || (rs.rs - n) % 2 != 0) fail("score parity");
  if (opts_.mode == Mode::Relevant && (q.sL1 < q.sL2 || q.sR1 < q.sR2))
    fail("nonzugzwang");
}

ScoreQuad Solver::search(const VertexSet &alive_root) {
  std::deque<Frame> stack;
  stack.push_back(Frame(alive_root));
  ScoreQuad last{};
  while (!stack.empty()) {
    Frame &f = stack.back();
    if (!f.expanded) {
      ScoreQuad q;
      if (memo_.lookup(f.alive, q)) {
        last = q;
        stack.pop_back();
        continue;
      }
      if (base_case(f.alive, q) || try_route(f.alive, q)) {
        if (opts_.audit) audit_entry(f.alive, q);
        memo_.insert(f.alive, q);
        last = q;
        stack.pop_back();
        continue;
      }
      expand(f);
      f.expanded = true;
    }
    size_t total = f.lkids.size() + f.rkids.size();
    bool pushed = false;
    while (f.next < total) {
      bool is_left = f.next < f.lkids.size();
      const Child &c = is_left ? f.lkids[f.next] : f.rkids[f.next - f.lkids.size()];
      ScoreQuad cq;
      if (!memo_.lookup(c.alive, cq)) {
        VertexSet child_alive = c.alive;
        stack.push_back(Frame(std::move(child_alive)));
        pushed = true;
        break;
      }
      if (is_left) {
        f.sL1 = std::max(f.sL1, c.removed + cq.sL2);
        f.sR2 = std::min(f.sR2, cq.sR1);
      } else {
        f.sR1 = std::max(f.sR1, c.removed + cq.sR2);
        f.sL2 = std::min(f.sL2, cq.sL1);
      }
      ++f.next;
    }
    if (pushed) continue;
    ScoreQuad q = finalize(f);
    if (opts_.audit) audit_entry(f.alive, q);
    memo_.insert(f.alive, q);
    last = q;
    stack.pop_back();
  }
  return last;
}

ScoreQuad Solver::search_root_parallel(const VertexSet &alive_root) {
  ScoreQuad q;
  if (memo_.lookup(alive_root, q)) return q;
  if (base_case(alive_root, q) || try_route(alive_root, q)) {
    if (opts_.audit) audit_entry(alive_root, q);
    memo_.insert(alive_root, q);
    return q;
  }
  Frame f(alive_root);
  expand(f);
  std::vector<const Child *> all;
  for (const Child &c : f.lkids) all.push_back(&c);
  for (const Child &c : f.rkids) all.push_back(&c);
  unsigned workers = std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                                        static_cast<unsigned>(all.size()));
  std::atomic<size_t> cursor{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < workers; ++t) {
    threads.emplace_back([&, t] {
      try {
        while (true) {
          size_t i = cursor.fetch_add(1);
          if (i >= all.size()) break;
          search(all[i]->alive);
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (std::thread &th : threads) th.join();
  for (const std::exception_ptr &e : errors) {
    if (e) std::rethrow_exception(e);
  }
  auto solved = [&](const VertexSet &alive) {
    ScoreQuad cq;
    if (!memo_.lookup(alive, cq))
      throw ContractViolation("worker left a root child unsolved");
    return cq;
  };
  for (const Child &c : f.lkids) {
    ScoreQuad cq = solved(c.alive);
    f.sL1 = std::max(f.sL1, c.removed + cq.sL2);
    f.sR2 = std::min(f.sR2, cq.sR1);
  }
  for (const Child &c : f.rkids) {
    ScoreQuad cq = solved(c.alive);
    f.sR1 = std::max(f.sR1, c.removed + cq.sR2);
    f.sL2 = std::min(f.sL2, cq.sL1);
  }
  q = finalize(f);
  if (opts_.audit) audit_entry(alive_root, q);
  memo_.insert(alive_root, q);
  return q;
}

ScoreQuad Solver::solve_position(const VertexSet &alive) {
  auto run = [&](const VertexSet &a) {
    return opts_.parallel_root ? search_root_parallel(a) : search(a);
  };
  if (opts_.mode == Mode::Raw) return run(alive);
  Position reduced = Position(*g_, alive).relevant_reduce();
  ScoreQuad q = run(reduced.alive());
  q.sL1 += reduced.credit(Color::L);
  q.sL2 += reduced.credit(Color::L);
  q.sR1 += reduced.credit(Color::R);
  q.sR2 += reduced.credit(Color::R);
  return q;
}

ScoreQuad Solver::solve() { return solve_position(g_->all()); }

ScoreQuad solve(const GameGraph &g, SolveOptions opts) { return Solver(g, opts).solve(); }

RelScores rel_scores(const GameGraph &g, SolveOptions opts) {
  ScoreQuad q = solve(g, opts);
  RelScores rs = rel_of(q);
  int n = g.size();
  if ((rs.ls - n) % 2 != 0 || (rs.rs - n) % 2 != 0)
    throw AuditError("relative scores violate the parity invariant");
  return rs;
}

int incentive(const GameGraph &g, SolveOptions opts) {
  RelScores rs = rel_scores(g, opts);
  return rs.ls - rs.rs;
}

BestMove best_move(const Position &p, Color mover, SolveOptions opts) {
  std::vector<int> candidates = p.alive_of(mover).to_vector();
  if (candidates.empty())
    throw NoMoveError(std::string("player ") + color_char(mover) + " has no alive vertex");
  Solver solver(p.graph(), opts);
  BestMove best;
  int best_value = INT_MIN;
  for (int v : candidates) {
    Position child = p.apply_move(mover, v, opts.mode);
    int removed = p.alive_count() - child.alive_count();
    ScoreQuad cq = solver.solve_position(child.alive());
    int value = removed + (mover == Color::L ? cq.sL2 : cq.sR2);
    if (value > best_value) {
      best_value = value;
      best = {v, cq};
    }
  }
  return best;
}

VerifyReport milnor_bounds_check(const GameGraph &g1, const GameGraph &g2, SolveOptions opts) {
  if (!Position(g1).is_relevant() || !Position(g2).is_relevant())
    throw std::invalid_argument("milnor_bounds_check requires relevant operands");
  RelScores a = rel_scores(g1, opts);
  RelScores b = rel_scores(g2, opts);
  RelScores s = rel_scores(disjoint_sum(g1, g2), opts);
  VerifyReport rep;
  rep.suite = "milnor-bounds";
  nlohmann::json w{{"ls1", a.ls}, {"rs1", a.rs}, {"ls2", b.ls},
                   {"rs2", b.rs}, {"lsSum", s.ls}, {"rsSum", s.rs}};
  rep.add("ls-lower", "corollary:milnor-sum-bounds",
          std::max(a.ls + b.rs, a.rs + b.ls) <= s.ls, w);
  rep.add("ls-upper", "corollary:milnor-sum-bounds", s.ls <= a.ls + b.ls, w);
  rep.add("rs-lower", "corollary:milnor-sum-bounds", a.rs + b.rs <= s.rs, w);
  rep.add("rs-upper", "corollary:milnor-sum-bounds",
          s.rs <= std::min(a.ls + b.rs, a.rs + b.ls), w);
  return rep;
}

} // namespace influence
