#include "subtree/edge_list.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace subtree {

namespace {

// Next line with content, comments stripped. Returns false at EOF.
bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

void parse_pair(const std::string& line, int line_no, long long& a, long long& b) {
  std::istringstream fields(line);
  std::string extra;
  if (!(fields >> a >> b)) throw ParseError(line_no, "expected two integers");
  if (fields >> extra) throw ParseError(line_no, "unexpected trailing token '" + extra + "'");
}

}  // namespace

EdgeListRead read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) throw ParseError(line_no, "missing header `n m`");
  long long n = 0;
  long long m = 0;
  parse_pair(line, line_no, n, m);
  if (n < 1 || n > kMaxVertices) throw ParseError(line_no, "vertex count " + std::to_string(n) + " out of range");
  if (m < 0) throw ParseError(line_no, "negative edge count");

  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  EdgeListRead result;
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, line_no)) {
      throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    long long u = 0;
    long long v = 0;
    parse_pair(line, line_no, u, v);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line_no, "endpoint out of range");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    const std::pair<int, int> key{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (!seen.insert(key).second) {
      ++result.duplicates;
      continue;
    }
    edges.push_back({key.first, key.second});
  }
  if (next_content_line(in, line, line_no)) throw ParseError(line_no, "more edge lines than declared");
  result.graph = build_graph(static_cast<int>(n), edges);
  return result;
}

EdgeListRead read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path.string());
  auto result = read_edge_list(in);
  if (result.duplicates > 0) {
    std::clog << path.string() << ": collapsed " << result.duplicates << " duplicate edge(s)\n";
  }
  return result;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& e : edges) out << e.u << ' ' << e.v << '\n';
}

}  // namespace subtree
