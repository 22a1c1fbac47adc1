#include <bit>
#include <stdexcept>
#include <string>

#include "subtree/detail/connected_sets.hpp"
#include "subtree/detail/modular.hpp"
#include "subtree/detail/parallel.hpp"
#include "subtree/detail/subtree_enum.hpp"
#include "subtree/exact_count.hpp"
#include "subtree/tree_tools.hpp"

namespace subtree {

namespace {

mpz_class binomial(int n, int k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return c;
}

// For each connected S of the target size: tau(G[S]) * det L_G[V \ S]. The
// second factor is tau(G/S), the number of ways to extend S to a spanning tree.
struct PairWorker {
  std::span<const std::uint64_t> adjacency;
  std::uint64_t all;
  int target;
  detail::MinorDeterminant det;
  detail::ResidueSum sum;
  std::vector<int> inner_diag;
  std::vector<int> outer_diag;
  std::vector<std::uint64_t> inner;
  std::vector<std::uint64_t> outer;

  PairWorker(std::span<const std::uint64_t> adj, const detail::ResidueSystem& system, int n, int size)
      : adjacency(adj),
        all(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1),
        target(size),
        det(system),
        sum(system),
        inner_diag(64, 0),
        outer_diag(64, 0),
        inner(static_cast<std::size_t>(system.size())),
        outer(static_cast<std::size_t>(system.size())) {
    for (int v = 0; v < n; ++v) outer_diag[static_cast<std::size_t>(v)] = std::popcount(adj[static_cast<std::size_t>(v)]);
  }

  void operator()(std::uint64_t set, int size) {
    if (size != target) return;
    const std::uint64_t rows = set & (set - 1);
    for (std::uint64_t r = rows; r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      inner_diag[static_cast<std::size_t>(v)] = std::popcount(adjacency[static_cast<std::size_t>(v)] & set);
    }
    det.compute(adjacency, rows, inner_diag, inner);
    det.compute(adjacency, all & ~set, outer_diag, outer);
    sum.add_product(inner, outer);
  }
};

}  // namespace

PairCount pair_count(const Graph& g, int k, const CountOptions& options) {
  const int n = g.order();
  if (k < 0 || k >= n) throw std::invalid_argument("pair_count: k must lie in [0, n-1]");
  if (n > options.max_exact_n) {
    throw CapExceeded("graph order " + std::to_string(n) + " exceeds the exact-census cap " +
                          std::to_string(options.max_exact_n),
                      "--max-exact-n");
  }
  if (n > kExactCensusHardCap) {
    throw CapExceeded("pair_count is limited to order " + std::to_string(kExactCensusHardCap), "--max-exact-n");
  }
  if (k == 0) return {0, spanning_tree_count(g)};

  // P_k <= C(n,k) s_n <= C(n,k) n^(n-2).
  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(std::max(n - 2, 0)));
  bound *= binomial(n, k);
  const detail::ResidueSystem system(bound);
  const auto adj = detail::adjacency_masks(g);
  const std::span<const std::uint64_t> adjs(adj);
  const int size = n - k;

  PairWorker seed_worker(adjs, system, n, size);
  const int split = std::min(size + 1, 4);
  auto tasks = detail::split_enumeration(adjs, n, size, split, seed_worker);
  const int workers = detail::worker_count(options.threads, tasks.size());
  std::vector<PairWorker> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(adjs, system, n, size);
  detail::parallel_for(tasks.size(), workers, [&](std::size_t i, int w) {
    detail::expand(adjs, tasks[i], size, pool[static_cast<std::size_t>(w)]);
  });
  detail::ResidueSum total = seed_worker.sum;
  for (const auto& w : pool) total.merge(w.sum);
  return {k, total.value()};
}

PairCount pair_count_oracle(const Graph& g, int k) {
  const int n = g.order();
  if (k < 0 || k >= n) throw std::invalid_argument("pair_count_oracle: k must lie in [0, n-1]");
  if (n > kPairOracleCap) {
    throw CapExceeded("pair_count_oracle is limited to order " + std::to_string(kPairOracleCap), "pair_count");
  }
  mpz_class total = 0;
  auto visit = [&](int size, const std::vector<Edge>& edges) {
    if (size != n) return;
    total += tree_subtree_polynomial(LabelledTree::from_edges(n, edges))[n - k];
  };
  detail::SubtreeGrower grower(g, visit);
  grower.grow_from(0);
  return {k, total};
}

SandwichReport sandwich_report(const Graph& g, const Census& census, int k, const CountOptions& options) {
  const int n = g.order();
  const int delta = degree_stats(g).min_degree;
  if (k < 0 || k > delta) throw std::invalid_argument("sandwich_report: k must lie in [0, delta]");
  if (census.order() != n) throw std::invalid_argument("sandwich_report: census order mismatch");
  SandwichReport r;
  r.k = k;
  mpz_class factor;
  mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(delta - k), static_cast<unsigned long>(k));
  r.lower = factor * census[n - k];
  r.value = pair_count(g, k, options).value;
  r.upper = binomial(n, k) * census[n];
  r.pass = r.lower <= r.value && r.value <= r.upper;
  return r;
}

SandwichReport sandwich_report(const Graph& g, int k, const CountOptions& options) {
  return sandwich_report(g, subtree_census(g, options), k, options);
}

}  // namespace subtree
