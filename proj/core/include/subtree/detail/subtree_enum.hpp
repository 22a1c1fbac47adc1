#pragma once

// Explicit subtree enumeration for the oracles. A subtree is grown from its
// lowest vertex r by branching on frontier edges (tree vertex to an outside
// vertex above r): each frontier edge is either taken or discarded for good.
// Every subtree is reached by exactly one sequence of decisions.

#include <vector>

#include "subtree/graph.hpp"

namespace subtree::detail {

template <class Visit>
class SubtreeGrower {
 public:
  SubtreeGrower(const Graph& g, Visit& visit) : g_(g), visit_(visit), in_tree_(static_cast<std::size_t>(g.order()), 0) {}

  /// Visits every subtree whose lowest vertex is `root`, as (vertex count, edges).
  void grow_from(int root) {
    root_ = root;
    in_tree_.assign(in_tree_.size(), 0);
    in_tree_[static_cast<std::size_t>(root)] = 1;
    edges_.clear();
    std::vector<Edge> frontier;
    push_frontier(root, frontier);
    recurse(frontier, 1);
  }

 private:
  void push_frontier(int v, std::vector<Edge>& frontier) const {
    for (int w : g_.neighbours(v).elements()) {
      if (w > root_ && !in_tree_[static_cast<std::size_t>(w)]) frontier.push_back({v, w});
    }
  }

  void recurse(std::vector<Edge> frontier, int size) {
    while (!frontier.empty() && in_tree_[static_cast<std::size_t>(frontier.back().v)]) frontier.pop_back();
    if (frontier.empty()) {
      visit_(size, edges_);
      return;
    }
    const Edge e = frontier.back();
    frontier.pop_back();
    recurse(frontier, size);  // e discarded

    in_tree_[static_cast<std::size_t>(e.v)] = 1;
    edges_.push_back(e);
    std::erase_if(frontier, [&](const Edge& f) { return f.v == e.v; });
    push_frontier(e.v, frontier);
    recurse(std::move(frontier), size + 1);
    edges_.pop_back();
    in_tree_[static_cast<std::size_t>(e.v)] = 0;
  }

  const Graph& g_;
  Visit& visit_;
  std::vector<char> in_tree_;
  std::vector<Edge> edges_;
  int root_ = 0;
};

}  // namespace subtree::detail
