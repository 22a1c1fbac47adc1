#include "subtree/random_models.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "subtree/errors.hpp"

namespace subtree {

void validate(const GnpParams& params) {
  if (params.n < 1) throw std::invalid_argument("G(n,p): n must be at least 1");
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw std::invalid_argument("G(n,p): p must lie in [0, 1]");
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

Seed trial_seed(Seed master, std::uint64_t index) {
  std::uint64_t z = master.value + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return {z ^ (z >> 31)};
}

Graph sample_gnp(const GnpParams& params, Seed seed) {
  validate(params);
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < params.n; ++u) {
    for (int v = u + 1; v < params.n; ++v) {
      if (rng.bernoulli(params.p)) edges.push_back({u, v});
    }
  }
  return build_graph(params.n, edges);
}

GnpSummary sample_gnp_summary(const GnpParams& params, Seed seed) {
  validate(params);
  const int n = params.n;
  Rng rng(seed);
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> size(static_cast<std::size_t>(n), 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  GnpSummary s;
  s.n = n;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!rng.bernoulli(params.p)) continue;
      ++s.edge_count;
      ++degree[static_cast<std::size_t>(u)];
      ++degree[static_cast<std::size_t>(v)];
      int a = find(u);
      int b = find(v);
      if (a == b) continue;
      if (size[static_cast<std::size_t>(a)] < size[static_cast<std::size_t>(b)]) std::swap(a, b);
      parent[static_cast<std::size_t>(b)] = a;
      size[static_cast<std::size_t>(a)] += size[static_cast<std::size_t>(b)];
    }
  }
  s.min_degree = n;
  for (int v = 0; v < n; ++v) {
    s.min_degree = std::min(s.min_degree, degree[static_cast<std::size_t>(v)]);
    s.max_degree = std::max(s.max_degree, degree[static_cast<std::size_t>(v)]);
    if (find(v) == v) s.largest_component = std::max(s.largest_component, size[static_cast<std::size_t>(v)]);
  }
  return s;
}

LabelledTree sample_uniform_labelled_tree(int n, Seed seed) {
  if (n < 2) throw std::invalid_argument("sample_uniform_labelled_tree needs n >= 2");
  Rng rng(seed);
  std::vector<int> word(static_cast<std::size_t>(n - 2));
  for (auto& s : word) s = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  return prufer_decode(word, n);
}

LabelledTree sample_uniform_spanning_tree(const Graph& g, Seed seed) {
  if (!is_connected(g)) throw DisconnectedGraph("sample_uniform_spanning_tree needs a connected graph");
  const int n = g.order();
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) nbrs[static_cast<std::size_t>(v)] = g.neighbours(v).elements();
  Rng rng(seed);
  std::vector<char> in_tree(static_cast<std::size_t>(n), 0);
  std::vector<int> next(static_cast<std::size_t>(n), -1);
  in_tree[0] = 1;
  for (int start = 1; start < n; ++start) {
    int u = start;
    while (!in_tree[static_cast<std::size_t>(u)]) {
      const auto& nb = nbrs[static_cast<std::size_t>(u)];
      next[static_cast<std::size_t>(u)] = nb[static_cast<std::size_t>(rng.below(nb.size()))];
      u = next[static_cast<std::size_t>(u)];
    }
    for (u = start; !in_tree[static_cast<std::size_t>(u)]; u = next[static_cast<std::size_t>(u)]) {
      in_tree[static_cast<std::size_t>(u)] = 1;
    }
  }
  return LabelledTree::from_parents(next);
}

}  // namespace subtree
