#include <bit>
#include <stdexcept>
#include <string>

#include "subtree/detail/connected_sets.hpp"
#include "subtree/detail/modular.hpp"
#include "subtree/detail/parallel.hpp"
#include "subtree/detail/subtree_enum.hpp"
#include "subtree/exact_count.hpp"

namespace subtree {

namespace {

mpz_class binomial(int n, int k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return c;
}

// k^(k-2), with 1^(-1) read as 1.
mpz_class cayley(int k) {
  if (k <= 2) return 1;
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(k - 2));
  return r;
}

struct CensusWorker {
  std::span<const std::uint64_t> adjacency;
  detail::MinorDeterminant det;
  std::vector<detail::ResidueSum> sums;
  std::vector<std::uint64_t> small;  // sizes 1 and 2 contribute one each
  std::vector<int> diag;
  std::vector<std::uint64_t> residues;

  CensusWorker(std::span<const std::uint64_t> adj, const detail::ResidueSystem& system, int n)
      : adjacency(adj),
        det(system),
        sums(static_cast<std::size_t>(n) + 1, detail::ResidueSum(system)),
        small(3, 0),
        diag(64, 0),
        residues(static_cast<std::size_t>(system.size())) {}

  void operator()(std::uint64_t set, int size) {
    if (size <= 2) {
      ++small[static_cast<std::size_t>(size)];
      return;
    }
    const std::uint64_t rows = set & (set - 1);
    for (std::uint64_t r = rows; r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      diag[static_cast<std::size_t>(v)] = std::popcount(adjacency[static_cast<std::size_t>(v)] & set);
    }
    det.compute(adjacency, rows, diag, residues);
    sums[static_cast<std::size_t>(size)].add(residues);
  }
};

void check_cap(int n, int cap) {
  if (n > cap) {
    throw CapExceeded("graph order " + std::to_string(n) + " exceeds the exact-census cap " + std::to_string(cap),
                      "--max-exact-n");
  }
  if (n > kExactCensusHardCap) {
    throw CapExceeded("graph order " + std::to_string(n) + " exceeds the single-word limit " +
                          std::to_string(kExactCensusHardCap),
                      "--max-exact-n");
  }
}

}  // namespace

Census subtree_census(const Graph& g, const CountOptions& options) {
  const int n = g.order();
  check_cap(n, options.max_exact_n);

  mpz_class bound = 1;
  for (int k = 3; k <= n; ++k) {
    const mpz_class b = binomial(n, k) * cayley(k);
    if (b > bound) bound = b;
  }
  const detail::ResidueSystem system(bound);
  const auto adj = detail::adjacency_masks(g);

  CensusWorker seed_worker(adj, system, n);
  const int split = std::min(n + 1, 4);
  auto tasks = detail::split_enumeration(std::span<const std::uint64_t>(adj), n, n, split, seed_worker);

  const int workers = detail::worker_count(options.threads, tasks.size());
  std::vector<CensusWorker> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(adj, system, n);
  detail::parallel_for(tasks.size(), workers, [&](std::size_t i, int w) {
    detail::expand(std::span<const std::uint64_t>(adj), tasks[i], n, pool[static_cast<std::size_t>(w)]);
  });

  std::vector<mpz_class> counts(static_cast<std::size_t>(n), 0);
  for (int k = 1; k <= std::min(n, 2); ++k) {
    std::uint64_t c = seed_worker.small[static_cast<std::size_t>(k)];
    for (const auto& w : pool) c += w.small[static_cast<std::size_t>(k)];
    counts[static_cast<std::size_t>(k - 1)] = static_cast<unsigned long>(c);
  }
  for (int k = 3; k <= n; ++k) {
    detail::ResidueSum total = seed_worker.sums[static_cast<std::size_t>(k)];
    for (const auto& w : pool) total.merge(w.sums[static_cast<std::size_t>(k)]);
    counts[static_cast<std::size_t>(k - 1)] = total.value();
  }
  return Census(std::move(counts));
}

Census brute_force_census(const Graph& g) {
  const int n = g.order();
  if (n > kBruteForceCensusCap) {
    throw CapExceeded("brute-force census is limited to order " + std::to_string(kBruteForceCensusCap),
                      "subtree_census");
  }
  std::vector<mpz_class> counts(static_cast<std::size_t>(n), 0);
  auto visit = [&](int size, const std::vector<Edge>& edges) {
    if (static_cast<int>(edges.size()) != size - 1) throw std::logic_error("grown subtree is not a tree");
    ++counts[static_cast<std::size_t>(size - 1)];
  };
  detail::SubtreeGrower grower(g, visit);
  for (int r = 0; r < n; ++r) grower.grow_from(r);
  return Census(std::move(counts));
}

Census complete_census(int n) {
  if (n < 1) throw std::invalid_argument("complete_census: n must be positive");
  std::vector<mpz_class> counts;
  counts.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) counts.push_back(binomial(n, k) * cayley(k));
  return Census(std::move(counts));
}

Census complete_bipartite_census(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite_census: sides must be positive");
  std::vector<mpz_class> counts(static_cast<std::size_t>(m + n), 0);
  counts[0] = m + n;
  mpz_class a;
  mpz_class b;
  for (int i = 1; i <= m; ++i) {
    const mpz_class ci = binomial(m, i);
    for (int j = 1; j <= n; ++j) {
      mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(i - 1));
      mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(j - 1));
      counts[static_cast<std::size_t>(i + j - 1)] += ci * binomial(n, j) * a * b;
    }
  }
  return Census(std::move(counts));
}

Census closed_form_census(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::complete:
      return complete_census(spec.a);
    case Family::complete_bipartite:
      return complete_bipartite_census(spec.a, spec.b);
    default:
      throw std::invalid_argument("no closed form for family " + family_name(spec.family));
  }
}

ExactProbability spanning_probability(const Census& census) {
  if (census.order() == 0) throw std::invalid_argument("empty census");
  return ExactProbability(mpq_class(census[census.order()], census.total()));
}

ExactProbability spanning_probability(const Graph& g, const CountOptions& options) {
  return spanning_probability(subtree_census(g, options));
}

mpq_class mean_subtree_edges(const Census& census) {
  if (census.order() == 0) throw std::invalid_argument("empty census");
  mpz_class weighted = 0;
  for (int k = 2; k <= census.order(); ++k) weighted += census[k] * (k - 1);
  mpq_class q(weighted, census.total());
  q.canonicalize();
  return q;
}

PrefixBoundCheck prefix_bound_check(const Census& census) {
  mpz_class prefix = 0;
  mpz_class scaled;
  for (int r = 1; r <= census.order(); ++r) {
    prefix += census[r];
    if (census[r] == 0) continue;
    mpz_mul_2exp(scaled.get_mpz_t(), census[r].get_mpz_t(), static_cast<mp_bitcnt_t>(r));
    if (prefix > scaled) return {false, r};
  }
  return {};
}

}  // namespace subtree
