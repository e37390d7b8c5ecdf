#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "influence/graph.hpp"

namespace influence {

struct ParseError : std::runtime_error {
  ParseError(int line, int column, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line(line), column(column) {}
  int line;
  int column;
};

// A parsed graph document. Input files may use arbitrary non-negative vertex
// ids; they are re-densified in ascending order and the mapping is kept in
// original_ids (new id -> file id).
struct GraphDoc {
  GameGraph graph;
  std::vector<long long> original_ids;
  std::vector<std::string> warnings;

  long long original_id(int v) const { return original_ids[v]; }
  // File id -> dense id, or -1 when unknown.
  int dense_id(long long original) const;
};

// Line-oriented format, '#' starts a comment:
//   influence v1
//   v <id> <L|R>
//   a <from> <to>
// Duplicate arcs are accepted with a warning; self-loops, duplicate vertex
// ids and arcs to unknown vertices are errors.
GraphDoc parse_graph(std::istream &in);
GraphDoc parse_graph(const std::string &text);
GraphDoc load_graph_file(const std::string &path); // adds the path to errors

// Canonical serialization: header, vertices in ascending id, arcs in
// lexicographic order. Round-trips bit-exactly through parse_graph.
std::string serialize_graph(const GameGraph &g);

// One-way visualization export; L vertices are drawn filled, R hollow.
std::string to_dot(const GameGraph &g);

} // namespace influence
