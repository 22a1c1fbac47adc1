#pragma once

// Connected vertex sets by canonical expansion: every connected set S is
// produced exactly once, from its lowest vertex, by only ever extending with
// vertices that entered the neighbourhood of S at the current step
// (Wernicke's ESU scheme). Vertices are bits of a single 64-bit word.

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace subtree::detail {

struct ExpansionState {
  std::uint64_t set = 0;
  std::uint64_t extension = 0;  // candidates not yet branched on
  std::uint64_t closed = 0;     // set, its neighbourhood, and forbidden low vertices
  int size = 0;
};

inline ExpansionState root_state(std::span<const std::uint64_t> adjacency, int root) {
  const std::uint64_t bit = std::uint64_t{1} << root;
  const std::uint64_t low = bit | (bit - 1);
  return {bit, adjacency[static_cast<std::size_t>(root)] & ~low, low | adjacency[static_cast<std::size_t>(root)], 1};
}

/// Visits `state.set` and every connected extension up to max_size vertices.
template <class Visit>
void expand(std::span<const std::uint64_t> adjacency, const ExpansionState& state, int max_size, Visit& visit) {
  visit(state.set, state.size);
  if (state.size >= max_size) return;
  std::uint64_t ext = state.extension;
  while (ext != 0) {
    const int w = std::countr_zero(ext);
    ext &= ext - 1;
    const std::uint64_t nw = adjacency[static_cast<std::size_t>(w)];
    const ExpansionState child{state.set | (std::uint64_t{1} << w), ext | (nw & ~state.closed),
                               state.closed | nw, state.size + 1};
    expand(adjacency, child, max_size, visit);
  }
}

/// Splits the enumeration for parallel work: sets with fewer than
/// `split_size` vertices are visited here; states of exactly that size are
/// returned for the caller to expand.
template <class Visit>
std::vector<ExpansionState> split_enumeration(std::span<const std::uint64_t> adjacency, int n, int max_size,
                                              int split_size, Visit& visit) {
  std::vector<ExpansionState> tasks;
  struct Collector {
    std::span<const std::uint64_t> adjacency;
    int max_size;
    int split_size;
    Visit& visit;
    std::vector<ExpansionState>& tasks;
    void run(const ExpansionState& s) {
      if (s.size == split_size) {
        tasks.push_back(s);
        return;
      }
      visit(s.set, s.size);
      if (s.size >= max_size) return;
      std::uint64_t ext = s.extension;
      while (ext != 0) {
        const int w = std::countr_zero(ext);
        ext &= ext - 1;
        const std::uint64_t nw = adjacency[static_cast<std::size_t>(w)];
        run({s.set | (std::uint64_t{1} << w), ext | (nw & ~s.closed), s.closed | nw, s.size + 1});
      }
    }
  } collector{adjacency, max_size, split_size, visit, tasks};
  for (int r = 0; r < n; ++r) collector.run(root_state(adjacency, r));
  return tasks;
}

inline std::vector<std::uint64_t> adjacency_masks(const auto& graph) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(graph.order()));
  for (int v = 0; v < graph.order(); ++v) adj[static_cast<std::size_t>(v)] = graph.neighbour_mask(v);
  return adj;
}

}  // namespace subtree::detail
