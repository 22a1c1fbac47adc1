#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace subtree {

/// Hard cap on the order of a Graph. Exact counting enforces tighter caps.
inline constexpr int kMaxVertices = 512;

struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Fixed-universe bitset over vertices 0..universe-1, stored in 64-bit words.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  /// Builds a set from the low word; requires universe <= 64.
  static VertexSet from_mask(int universe, std::uint64_t mask);
  static VertexSet from_elements(int universe, std::span<const int> elements);
  static VertexSet full(int universe);

  int universe() const { return universe_; }
  bool contains(int v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  void insert(int v);
  void erase(int v);
  int size() const;
  bool empty() const;

  /// Low 64 bits; the whole set when universe <= 64.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }
  std::span<const std::uint64_t> words() const { return words_; }

  std::vector<int> elements() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet complement() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected labelled graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  int order() const { return n_; }
  int edge_count() const { return edge_count_; }

  bool has_edge(int u, int v) const { return adjacency_[static_cast<std::size_t>(u)].contains(v); }
  const VertexSet& neighbours(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }

  /// Neighbourhood as a single word. Only meaningful when order() <= 64.
  std::uint64_t neighbour_mask(int v) const { return adjacency_[static_cast<std::size_t>(v)].low_word(); }

  /// Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Copy of this graph with one more edge (no-op if already present).
  Graph with_edge(int u, int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(int n, std::span<const Edge> edges);

  int n_ = 0;
  int edge_count_ = 0;
  std::vector<VertexSet> adjacency_;
};

/// Builds a graph from an edge list; duplicate edges collapse to one.
/// Throws std::invalid_argument on out-of-range endpoints, self-loops, or
/// n outside [1, kMaxVertices].
Graph build_graph(int n, std::span<const Edge> edges);

/// Symmetric integer edge multiplicities with zero diagonal.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n);
  static Multigraph from_graph(const Graph& g);

  int order() const { return n_; }
  long long multiplicity(int u, int v) const {
    return mult_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
  }
  /// Adds `count` parallel edges between u and v. Loops are discarded.
  void add_edges(int u, int v, long long count = 1);
  long long degree(int v) const;

 private:
  int n_ = 0;
  std::vector<long long> mult_;
};

enum class Family {
  complete,
  complete_bipartite,
  path,
  cycle,
  star,
  clique_pendant_path,
  clique_path_clique,
};

/// A named family with its size parameters. `b` is unused by one-parameter
/// families.
struct FamilySpec {
  Family family = Family::complete;
  int a = 1;
  int b = 0;
};

// Canonical labellings:
//   complete(n)              0..n-1
//   complete_bipartite(m,n)  side A = 0..m-1, side B = m..m+n-1
//   path(n)                  0-1-...-(n-1)
//   cycle(n)                 path(n) plus (n-1)-0, n >= 3
//   star(n)                  centre 0, leaves 1..n-1
//   clique_pendant_path(c,L) clique 0..c-1, path c..c+L-1 hanging off vertex 0
//   clique_path_clique(c,L)  cliques 0..c-1 and c..2c-1, path 2c..2c+L-1
//                            running from vertex 0 to vertex c (L+1 edges)
Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);
Graph clique_pendant_path(int clique_n, int path_len);
Graph clique_path_clique(int clique_n, int path_len);
Graph named_graph(const FamilySpec& spec);

/// Parses "complete:5", "complete_bipartite:3,4", "clique_path_clique:6,10".
FamilySpec parse_family(const std::string& text);
std::string family_name(Family f);

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the vertex of the host graph relabelled to i (increasing).
  std::vector<int> original;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Contracts the connected vertex set `s` to vertex 0. Vertices outside `s`
/// keep their relative order as 1..n-|s|. Edges inside `s` are discarded.
Multigraph contract_connected_set(const Graph& g, const VertexSet& s);

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  bool connected = false;
};

DegreeStats degree_stats(const Graph& g);
bool is_connected(const Graph& g);
bool is_connected_subset(const Graph& g, const VertexSet& s);
int largest_component_size(const Graph& g);

/// The graph with vertex v relabelled to perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

}  // namespace subtree
