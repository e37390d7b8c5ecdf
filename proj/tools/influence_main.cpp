#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "influence/families.hpp"
#include "influence/graph_io.hpp"
#include "influence/segments.hpp"
#include "influence/solver.hpp"
#include "influence/suites.hpp"

namespace {

using influence::Color;
using influence::GameGraph;
using influence::GraphDoc;
using influence::Mode;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

void write_or_print(const std::string &text, const std::string &out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw influence::GraphError("cannot write file: " + out_path);
  out << text;
}

std::filesystem::path results_dir(const std::string &flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char *env = std::getenv("INFLUENCE_RESULTS_DIR")) return env;
  return "results";
}

int run_solve(const std::string &path, const std::string &mode, const std::string &pruning,
              bool parallel, bool audit, bool routing, bool as_json) {
  GraphDoc doc = influence::load_graph_file(path);
  for (const std::string &w : doc.warnings) std::cerr << "warning: " << w << '\n';
  influence::SolveOptions opts;
  opts.mode = mode == "raw" ? Mode::Raw : Mode::Relevant;
  opts.pruning = pruning != "off";
  opts.parallel_root = parallel;
  opts.audit = audit;
  opts.segment_routing = routing;

  auto start = std::chrono::steady_clock::now();
  influence::Solver solver(doc.graph, opts);
  influence::ScoreQuad q = solver.solve();
  double elapsed = ms_since(start);
  influence::RelScores rs = rel_of(q);

  // Opening recommendations use the plain rules on the original position.
  influence::SolveOptions raw;
  raw.mode = Mode::Raw;
  json best_l, best_r;
  if (doc.graph.count(Color::L) > 0)
    best_l =
        doc.original_id(influence::best_move(influence::Position(doc.graph), Color::L, raw).vertex);
  if (doc.graph.count(Color::R) > 0)
    best_r =
        doc.original_id(influence::best_move(influence::Position(doc.graph), Color::R, raw).vertex);

  json out{{"n", doc.graph.size()},
           {"sL1", q.sL1},
           {"sL2", q.sL2},
           {"sR1", q.sR1},
           {"sR2", q.sR2},
           {"ls", rs.ls},
           {"rs", rs.rs},
           {"incentive", rs.ls - rs.rs},
           {"bestMoveL", best_l},
           {"bestMoveR", best_r},
           {"memoEntries", solver.memo_stats().entries},
           {"elapsedMs", elapsed}};
  if (as_json) {
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "vertices:  " << doc.graph.size() << "\n"
              << "scores:    sL1=" << q.sL1 << " sL2=" << q.sL2 << " sR1=" << q.sR1
              << " sR2=" << q.sR2 << "\n"
              << "relative:  Ls=" << rs.ls << " Rs=" << rs.rs
              << " incentive=" << rs.ls - rs.rs << "\n"
              << "openings:  L=" << best_l.dump() << " R=" << best_r.dump() << "\n"
              << "memo:      " << solver.memo_stats().entries << " positions, " << elapsed
              << " ms\n";
  }
  return kExitOk;
}

int run_table(int max_n, const std::string &csv_path, bool as_json) {
  auto start = std::chrono::steady_clock::now();
  std::vector<influence::SegmentTableRow> rows = influence::segment_table(max_n);
  double elapsed = ms_since(start);
  std::string csv = "n,ls,rs\n";
  for (const auto &r : rows)
    csv += std::to_string(r.n) + "," + std::to_string(r.ls) + "," + std::to_string(r.rs) + "\n";
  if (as_json) {
    json jr = json::array();
    for (const auto &r : rows) jr.push_back({{"n", r.n}, {"ls", r.ls}, {"rs", r.rs}});
    std::cout << json{{"maxN", max_n}, {"rows", jr}, {"elapsedMs", elapsed}}.dump() << '\n';
    if (!csv_path.empty()) write_or_print(csv, csv_path);
  } else {
    write_or_print(csv, csv_path);
    if (!csv_path.empty())
      std::cerr << "wrote " << rows.size() << " rows to " << csv_path << " in " << elapsed
                << " ms\n";
  }
  return kExitOk;
}

int run_verify(const std::string &suite, bool all, bool list, influence::SuiteParams params,
               const std::string &out_dir_flag) {
  if (list) {
    for (const influence::SuiteInfo &info : influence::suite_registry())
      std::cout << info.name << "  -  " << info.description << '\n';
    return kExitOk;
  }
  std::vector<std::string> names;
  if (all) {
    for (const influence::SuiteInfo &info : influence::suite_registry())
      names.push_back(info.name);
  } else if (!suite.empty()) {
    names.push_back(suite);
  } else {
    std::cerr << "verify needs --suite, --all or --list\n";
    return kExitUsage;
  }
  std::filesystem::path dir = results_dir(out_dir_flag);
  std::filesystem::create_directories(dir);
  bool failed = false;
  for (const std::string &name : names) {
    influence::VerifyReport rep = influence::run_suite(name, params);
    failed |= rep.hard_fail();
    std::ofstream js(dir / (name + ".json"));
    js << rep.to_json().dump(2) << '\n';
    std::ofstream cs(dir / (name + ".csv"));
    cs << rep.to_csv();
    std::cout << rep.summary() << "  (" << rep.elapsed_ms << " ms)\n";
  }
  std::cout << (failed ? "VERIFY: failures detected\n" : "VERIFY: all hard claims hold\n");
  return failed ? kExitClaimFailure : kExitOk;
}

int run_play(const std::string &path, const std::string &human, const std::string &first) {
  GraphDoc doc = influence::load_graph_file(path);
  influence::Position pos(doc.graph);
  Color to_move = first == "R" ? Color::R : Color::L;
  int taken_l = 0, taken_r = 0;
  auto human_plays = [&](Color c) {
    return human == "both" || (human == "L" && c == Color::L) ||
           (human == "R" && c == Color::R);
  };
  auto show = [&](Color c) {
    std::cout << color_char(c) << " alive:";
    pos.alive_of(c).for_each([&](int v) { std::cout << ' ' << doc.original_id(v); });
    std::cout << '\n';
  };
  std::cout << "position " << path << " (" << doc.graph.size() << " vertices)\n";
  while (pos.alive().any()) {
    if (pos.alive_of(to_move).empty()) {
      std::cout << color_char(to_move) << " has no vertex and waits\n";
      to_move = opposite(to_move);
      continue;
    }
    show(Color::L);
    show(Color::R);
    int choice = -1;
    if (human_plays(to_move)) {
      while (true) {
        std::cout << "your move (" << color_char(to_move) << "): " << std::flush;
        long long id;
        if (!(std::cin >> id)) {
          std::cout << "\ninput closed, aborting game\n";
          return kExitUsage;
        }
        int dense = doc.dense_id(id);
        if (dense >= 0 && pos.is_alive(dense) && doc.graph.color(dense) == to_move) {
          choice = dense;
          break;
        }
        std::cout << "illegal move, pick an alive " << color_char(to_move) << " vertex\n";
      }
    } else {
      influence::SolveOptions raw;
      raw.mode = Mode::Raw;
      choice = influence::best_move(pos, to_move, raw).vertex;
      std::cout << color_char(to_move) << " engine plays " << doc.original_id(choice) << '\n';
    }
    influence::Position next = pos.apply_move(to_move, choice, Mode::Raw);
    int removed = pos.alive_count() - next.alive_count();
    (to_move == Color::L ? taken_l : taken_r) += removed;
    std::cout << color_char(to_move) << " takes " << removed << " (total "
              << (to_move == Color::L ? taken_l : taken_r) << ")\n";
    pos = next;
    to_move = opposite(to_move);
  }
  std::cout << "game over: L=" << taken_l << " R=" << taken_r << " -> "
            << (taken_l == taken_r ? "tie" : (taken_l > taken_r ? "Left wins" : "Right wins"))
            << '\n';
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact solver and verification harness for the influence scoring game"};
  app.require_subcommand(1);

  // solve
  std::string solve_path, solve_mode = "relevant", solve_pruning = "on";
  bool solve_parallel = false, solve_audit = false, solve_routing = false, solve_json = false;
  CLI::App *solve = app.add_subcommand("solve", "score a graph file");
  solve->add_option("path", solve_path, "graph file")->required();
  solve->add_option("--mode", solve_mode, "raw|relevant")
      ->check(CLI::IsMember({"raw", "relevant"}));
  solve->add_option("--pruning", solve_pruning, "on|off")->check(CLI::IsMember({"on", "off"}));
  solve->add_flag("--parallel", solve_parallel, "evaluate root moves on worker threads");
  solve->add_flag("--audit", solve_audit, "assert game invariants on every memo entry");
  solve->add_flag("--segment-routing", solve_routing,
                  "answer segment-union positions from the specialized solver");
  solve->add_flag("--json", solve_json, "emit one JSON object");

  // gen
  CLI::App *gen = app.add_subcommand("gen", "generate instance families");
  gen->require_subcommand(1);
  int seg_n = 5;
  std::string seg_class = "minus", gen_out;
  CLI::App *gen_segment = gen->add_subcommand("segment", "alternating path");
  gen_segment->add_option("--n", seg_n, "vertex count")->required();
  gen_segment->add_option("--class", seg_class, "minus|plus endpoint class for odd sizes")
      ->check(CLI::IsMember({"minus", "plus"}));
  gen_segment->add_option("--out", gen_out, "output file");
  int cyc_n = 6;
  CLI::App *gen_cycle = gen->add_subcommand("cycle", "alternating cycle");
  gen_cycle->add_option("--n", cyc_n, "vertex count (even)")->required();
  gen_cycle->add_option("--out", gen_out, "output file");
  int tree_n = 1, tree_c = 2;
  bool tree_j = false;
  CLI::App *gen_tree = gen->add_subcommand("tree", "branching-3 oriented tree");
  gen_tree->add_option("--n", tree_n, "internal depth")->required();
  gen_tree->add_option("--c", tree_c, "leaf fan-out")->required();
  gen_tree->add_flag("--j", tree_j, "two disjoint copies");
  gen_tree->add_option("--out", gen_out, "output file");
  int qp_len = 8;
  uint64_t qp_seed = 1;
  std::string qp_colors, qp_arcs;
  CLI::App *gen_qp = gen->add_subcommand("quasipath", "path with arbitrary arc orientations");
  gen_qp->add_option("--len", qp_len, "vertex count for random sampling");
  gen_qp->add_option("--seed", qp_seed, "random seed");
  gen_qp->add_option("--colors", qp_colors, "explicit colors, e.g. LRRL");
  gen_qp->add_option("--arcs", qp_arcs, "explicit orientations, e.g. '><>'");
  gen_qp->add_option("--out", gen_out, "output file");

  // table
  int table_max_n = 38;
  std::string table_csv;
  bool table_json = false;
  CLI::App *table = app.add_subcommand("table", "single-segment score table");
  table->add_option("--max-n", table_max_n, "largest segment size");
  table->add_option("--csv", table_csv, "write CSV here instead of stdout");
  table->add_flag("--json", table_json, "emit a JSON summary");

  // verify
  std::string verify_suite, verify_dir;
  bool verify_all = false, verify_list = false;
  influence::SuiteParams params;
  CLI::App *verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", verify_suite, "suite name");
  verify->add_flag("--all", verify_all, "run every registered suite");
  verify->add_flag("--list", verify_list, "list registered suites");
  verify->add_option("--seed", params.seed, "seed for randomized suites");
  verify->add_option("--instances", params.instances, "seeded instance count");
  verify->add_option("--max-n", params.max_n, "family size bound");
  verify->add_option("--total-max", params.total_max, "total vertex cap");
  verify->add_option("--trials", params.trials, "sampled collection count");
  verify->add_option("--out-dir", verify_dir, "report directory");

  // play
  std::string play_path, play_human = "none", play_first = "L";
  CLI::App *play = app.add_subcommand("play", "interactive game against the engine");
  play->add_option("path", play_path, "graph file")->required();
  play->add_option("--human", play_human, "which side you play")
      ->check(CLI::IsMember({"L", "R", "both", "none"}));
  play->add_option("--first", play_first, "who moves first")->check(CLI::IsMember({"L", "R"}));

  // export-dot
  std::string dot_path, dot_out;
  CLI::App *dot = app.add_subcommand("export-dot", "emit Graphviz for a graph file");
  dot->add_option("path", dot_path, "graph file")->required();
  dot->add_option("--out", dot_out, "output file");

  try {
    app.parse(argc, argv);

    if (*solve)
      return run_solve(solve_path, solve_mode, solve_pruning, solve_parallel, solve_audit,
                       solve_routing, solve_json);
    if (*gen) {
      GameGraph g;
      std::string summary;
      if (*gen_segment) {
        bool class_given = gen_segment->count("--class") > 0;
        if (seg_n % 2 == 0 && class_given)
          throw std::invalid_argument("even segments take no endpoint class");
        g = influence::make_segment(
            seg_n, seg_n % 2 == 0 ? influence::OddClass::None
                                  : (seg_class == "plus" ? influence::OddClass::Plus
                                                         : influence::OddClass::Minus));
        summary = "segment n=" + std::to_string(seg_n);
      } else if (*gen_cycle) {
        g = influence::make_cycle(cyc_n);
        summary = "cycle n=" + std::to_string(cyc_n);
      } else if (*gen_tree) {
        influence::TreeSpec spec{tree_n, tree_c};
        g = tree_j ? influence::make_j(spec) : influence::make_tree(spec);
        summary = std::string(tree_j ? "double tree" : "tree") + " n=" +
                  std::to_string(tree_n) + " c=" + std::to_string(tree_c);
      } else if (*gen_qp) {
        if (!qp_colors.empty()) {
          influence::QuasiPathSpec spec;
          for (char c : qp_colors) {
            if (c != 'L' && c != 'R') throw CLI::ValidationError("--colors needs L/R only");
            spec.colors.push_back(c == 'L' ? Color::L : Color::R);
          }
          for (char c : qp_arcs) {
            if (c != '>' && c != '<') throw CLI::ValidationError("--arcs needs >/< only");
            spec.forward.push_back(c == '>');
          }
          g = influence::make_quasi_path(spec);
          summary = "quasipath len=" + std::to_string(spec.colors.size());
        } else {
          influence::SplitMix64 rng(qp_seed);
          influence::QuasiPathSample s = influence::random_quasi_path(rng, qp_len);
          g = s.graph;
          summary = "quasipath len=" + std::to_string(qp_len) +
                    " seed=" + std::to_string(qp_seed) +
                    " rejections=" + std::to_string(s.rejections);
        }
      }
      write_or_print(influence::serialize_graph(g), gen_out);
      std::cerr << summary << ": " << g.size() << " vertices, " << g.arcs().size()
                << " arcs\n";
      return kExitOk;
    }
    if (*table) return run_table(table_max_n, table_csv, table_json);
    if (*verify) return run_verify(verify_suite, verify_all, verify_list, params, verify_dir);
    if (*play) return run_play(play_path, play_human, play_first);
    if (*dot) {
      GraphDoc doc = influence::load_graph_file(dot_path);
      write_or_print(influence::to_dot(doc.graph), dot_out);
      return kExitOk;
    }
  } catch (const CLI::ParseError &e) {
    return app.exit(e) ? kExitUsage : kExitOk;
  } catch (const influence::ParseError &e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const influence::AuditError &e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitClaimFailure;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
