#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "subtree/graph.hpp"

namespace subtree {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct EdgeListRead {
  Graph graph;
  /// Edge lines that repeated an earlier edge and were collapsed.
  int duplicates = 0;
};

// Format: first content line `n m`, then exactly m lines `u v` (0-indexed).
// Blank lines and anything after '#' are ignored.
EdgeListRead read_edge_list(std::istream& in);
EdgeListRead read_edge_list_file(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace subtree
