#pragma once

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sfnet/error.hpp"
#include "sfnet/graph.hpp"

namespace sfnet {

/// A parsed directed edge list: ordered arcs with exact duplicates collapsed.
struct ArcList {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;
};

namespace detail {

// Returns false for blank/comment lines, throws ParseError on malformed input.
inline bool parse_edge_line(const std::string& line, int line_no, long long& a, long long& b) {
  std::size_t start = line.find_first_not_of(" \t\r");
  if (start == std::string::npos) return false;
  if (line[start] == '#') return false;
  std::istringstream in(line);
  if (!(in >> a >> b)) throw ParseError(line_no, "expected two integers: '" + line + "'");
  std::string rest;
  if (in >> rest) throw ParseError(line_no, "trailing content: '" + rest + "'");
  if (a < 0 || b < 0) throw ParseError(line_no, "node ids must be non-negative");
  if (a == b) throw ParseError(line_no, "self-loop " + std::to_string(a) + " rejected");
  if (a >= std::numeric_limits<int>::max() || b >= std::numeric_limits<int>::max())
    throw ParseError(line_no, "node id out of range");
  return true;
}

// "# nodes <n>" comments let files with trailing isolated nodes round-trip.
inline bool parse_nodes_comment(const std::string& line, int& n_out) {
  std::istringstream in(line);
  std::string hash, word;
  long long n;
  if (!(in >> hash >> word >> n)) return false;
  if (hash != "#" || word != "nodes" || n < 0 || n >= std::numeric_limits<int>::max())
    return false;
  n_out = static_cast<int>(n);
  return true;
}

}  // namespace detail

/// Reads the undirected edge-list text format: one edge per line, two
/// whitespace-separated non-negative node ids, '#' lines ignored. Duplicate
/// and reversed-duplicate lines collapse to one edge; self-loops are rejected
/// with the offending line number.
inline Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int declared_n = -1;
  std::set<std::pair<int, int>> edges;
  int max_id = -1;
  while (std::getline(in, line)) {
    ++line_no;
    int n_comment = 0;
    if (detail::parse_nodes_comment(line, n_comment)) declared_n = n_comment;
    long long a = 0, b = 0;
    if (!detail::parse_edge_line(line, line_no, a, b)) continue;
    const int u = static_cast<int>(std::min(a, b));
    const int v = static_cast<int>(std::max(a, b));
    edges.emplace(u, v);
    max_id = std::max(max_id, v);
  }
  const int n = std::max(declared_n, max_id + 1);
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(Edge(u, v));
  return g;
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return read_edge_list(in);
}

/// Reads a directed edge list: each line is an arc (source, target). Exact
/// duplicate arcs collapse; opposite arcs are kept distinct.
inline ArcList read_arc_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int declared_n = -1;
  std::set<std::pair<int, int>> seen;
  ArcList out;
  int max_id = -1;
  while (std::getline(in, line)) {
    ++line_no;
    int n_comment = 0;
    if (detail::parse_nodes_comment(line, n_comment)) declared_n = n_comment;
    long long a = 0, b = 0;
    if (!detail::parse_edge_line(line, line_no, a, b)) continue;
    const auto arc = std::make_pair(static_cast<int>(a), static_cast<int>(b));
    if (seen.insert(arc).second) out.arcs.push_back(arc);
    max_id = std::max(max_id, std::max(arc.first, arc.second));
  }
  out.n = std::max(declared_n, max_id + 1);
  return out;
}

inline ArcList read_arc_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return read_arc_list(in);
}

inline void write_edge_list(const Graph& g, std::ostream& out) {
  out << "# nodes " << g.node_count() << "\n";
  std::vector<Edge> edges = g.edges();
  std::sort(edges.begin(), edges.end());
  for (const Edge& e : edges) out << e.u << " " << e.v << "\n";
}

inline void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_edge_list(g, out);
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace sfnet
