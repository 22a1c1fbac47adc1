#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subtree/census.hpp"
#include "subtree/graph.hpp"

namespace subtree {

/// A tree on vertices 0..n-1 (n >= 1).
class LabelledTree {
 public:
  LabelledTree() = default;

  /// Throws std::invalid_argument unless the edges form a spanning tree.
  static LabelledTree from_edges(int n, std::span<const Edge> edges);
  /// parent[root] = -1; every other entry names a vertex. Throws on cycles
  /// or more than one root.
  static LabelledTree from_parents(std::span<const int> parent);

  int order() const { return n_; }
  /// Normalised (u < v), sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  const std::vector<int>& neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  /// Parent array with respect to `root` (parent[root] = -1).
  std::vector<int> parents(int root = 0) const;
  Graph graph() const;

  friend bool operator==(const LabelledTree& a, const LabelledTree& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// s_1..s_n of a tree by a rooted dynamic programme in O(n^2).
Census tree_subtree_polynomial(const LabelledTree& t);

/// Number of degree-one vertices. A single vertex has none; that case logs
/// a warning to std::clog and returns 0.
int leaf_count(const LabelledTree& t);

/// C(l,k) <= s_{n-k}(T) <= C(l+k-1,k) for a tree with l leaves.
struct LeafSandwich {
  int k = 0;
  mpz_class lower;
  mpz_class value;
  mpz_class upper;
  bool pass = false;
};

LeafSandwich leaf_sandwich_check(const LabelledTree& t, int k);
/// Same check against a precomputed census of t.
LeafSandwich leaf_sandwich_check(const LabelledTree& t, const Census& census, int k);

std::vector<int> prufer_encode(const LabelledTree& t);
/// Total on sequences of length n-2 over 0..n-1; throws otherwise.
LabelledTree prufer_decode(std::span<const int> sequence, int n);

/// Number of surjections from an a-set onto a b-set.
mpz_class surjection_count(int a, int b);
/// Labelled trees on n vertices with exactly l leaves: C(n,l) Sur(n-2, n-l).
mpz_class trees_with_leaf_count(int n, int leaves);
/// Labelled trees on n vertices with fewer than beta*n leaves. beta > 1 is
/// clamped to every tree.
mpz_class leaf_deficient_tree_bound(int n, double beta);

/// A forest of rooted trees given by parent pointers (-1 for roots).
class RootedForest {
 public:
  RootedForest() = default;
  /// Throws std::invalid_argument on out-of-range parents or cycles.
  explicit RootedForest(std::vector<int> parent);

  int size() const { return static_cast<int>(parent_.size()); }
  int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& parents() const { return parent_; }
  /// Number of nodes in the subtree hanging from v, v included.
  std::vector<int> subtree_sizes() const;

 private:
  std::vector<int> parent_;
};

/// |F|! / prod_v s(v).
mpz_class forest_linear_extensions(const RootedForest& f);
/// Counts orders listing every parent before its children, by exhaustive
/// search. Forests of at most 8 nodes.
mpz_class linear_extensions_oracle(const RootedForest& f);

/// {"n":4,"parent":[-1,0,0,0]} with the tree rooted at 0.
std::string to_json(const LabelledTree& t);
LabelledTree tree_from_json(std::string_view text);
std::string prufer_to_json(std::span<const int> sequence);
std::vector<int> prufer_from_json(std::string_view text);

}  // namespace subtree
