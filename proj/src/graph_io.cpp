#include "influence/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace influence {

namespace {

struct Token {
  std::string text;
  int column; // 1-based
};

std::vector<Token> tokenize(const std::string &line) {
  std::vector<Token> toks;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    toks.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return toks;
}

long long parse_id(const Token &t, int lineno) {
  if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(lineno, t.column, "expected a non-negative integer, got '" + t.text + "'");
  try {
    return std::stoll(t.text);
  } catch (const std::exception &) {
    throw ParseError(lineno, t.column, "integer out of range: '" + t.text + "'");
  }
}

} // namespace

int GraphDoc::dense_id(long long original) const {
  auto it = std::lower_bound(original_ids.begin(), original_ids.end(), original);
  if (it == original_ids.end() || *it != original) return -1;
  return static_cast<int>(it - original_ids.begin());
}

GraphDoc parse_graph(std::istream &in) {
  GraphDoc doc;
  std::map<long long, Color> vertices;
  std::vector<std::pair<std::pair<long long, long long>, int>> raw_arcs; // arc, line
  bool header_seen = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<Token> toks = tokenize(line);
    if (toks.empty()) continue;
    if (!header_seen) {
      if (toks.size() != 2 || toks[0].text != "influence" || toks[1].text != "v1")
        throw ParseError(lineno, toks[0].column,
                         "expected header 'influence v1', got '" + line + "'");
      header_seen = true;
      continue;
    }
    if (toks[0].text == "v") {
      if (toks.size() != 3)
        throw ParseError(lineno, toks[0].column, "vertex line must be 'v <id> <L|R>'");
      long long id = parse_id(toks[1], lineno);
      Color c;
      if (toks[2].text == "L") {
        c = Color::L;
      } else if (toks[2].text == "R") {
        c = Color::R;
      } else {
        throw ParseError(lineno, toks[2].column,
                         "vertex color must be L or R, got '" + toks[2].text + "'");
      }
      if (!vertices.emplace(id, c).second)
        throw ParseError(lineno, toks[1].column,
                         "duplicate vertex id " + std::to_string(id));
    } else if (toks[0].text == "a") {
      if (toks.size() != 3)
        throw ParseError(lineno, toks[0].column, "arc line must be 'a <from> <to>'");
      long long from = parse_id(toks[1], lineno);
      long long to = parse_id(toks[2], lineno);
      if (from == to)
        throw ParseError(lineno, toks[1].column,
                         "self-loop at line " + std::to_string(lineno) + " (vertex " +
                             std::to_string(from) + ")");
      raw_arcs.push_back({{from, to}, lineno});
    } else {
      throw ParseError(lineno, toks[0].column,
                       "unknown directive '" + toks[0].text + "'");
    }
  }
  if (!header_seen) throw ParseError(std::max(lineno, 1), 1, "missing 'influence v1' header");

  doc.original_ids.reserve(vertices.size());
  std::vector<Color> colors;
  for (const auto &[id, c] : vertices) {
    doc.original_ids.push_back(id);
    colors.push_back(c);
  }
  std::set<std::pair<long long, long long>> seen;
  std::vector<Arc> arcs;
  for (const auto &[arc, arc_line] : raw_arcs) {
    int from = doc.dense_id(arc.first);
    int to = doc.dense_id(arc.second);
    if (from < 0)
      throw ParseError(arc_line, 1, "arc references unknown vertex " + std::to_string(arc.first));
    if (to < 0)
      throw ParseError(arc_line, 1, "arc references unknown vertex " + std::to_string(arc.second));
    if (!seen.insert(arc).second) {
      doc.warnings.push_back("line " + std::to_string(arc_line) + ": duplicate arc " +
                             std::to_string(arc.first) + "->" + std::to_string(arc.second) +
                             " ignored");
      continue;
    }
    arcs.push_back({from, to});
  }
  int n = static_cast<int>(colors.size());
  doc.graph = GameGraph(n, std::move(colors), std::move(arcs));
  return doc;
}

GraphDoc parse_graph(const std::string &text) {
  std::istringstream in(text);
  return parse_graph(in);
}

GraphDoc load_graph_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file: " + path);
  return parse_graph(in);
}

std::string serialize_graph(const GameGraph &g) {
  std::ostringstream out;
  out << "influence v1\n";
  for (int v = 0; v < g.size(); ++v)
    out << "v " << v << ' ' << color_char(g.color(v)) << '\n';
  for (const Arc &a : g.arcs()) out << "a " << a.from << ' ' << a.to << '\n';
  return out.str();
}

std::string to_dot(const GameGraph &g) {
  std::ostringstream out;
  out << "digraph influence {\n";
  out << "  rankdir=TB;\n";
  for (int v = 0; v < g.size(); ++v) {
    out << "  " << v << " [shape=circle";
    if (g.color(v) == Color::L) {
      out << ", style=filled, fillcolor=black, fontcolor=white";
    }
    out << ", label=\"" << v << "\"];\n";
  }
  for (const Arc &a : g.arcs()) out << "  " << a.from << " -> " << a.to << ";\n";
  out << "}\n";
  return out.str();
}

} // namespace influence
