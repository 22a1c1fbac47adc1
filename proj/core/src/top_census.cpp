#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "subtree/detail/log_det.hpp"
#include "subtree/detail/modular.hpp"
#include "subtree/detail/parallel.hpp"
#include "subtree/exact_count.hpp"

namespace subtree {

namespace {

double binomial_double(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return c;
}

// All k-subsets of 0..n-1 in lexicographic order, flattened.
std::vector<int> subsets(int n, int k) {
  std::vector<int> out;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.insert(out.end(), c.begin(), c.end());
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

void exact_top(const Graph& g, int depth, int threads, TopCensus& out) {
  const int n = g.order();
  mpz_class bound = 1;
  for (int k = 0; k <= depth; ++k) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    const int m = n - k;
    if (m > 2) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(m - 2));
      c *= p;
    }
    if (c > bound) bound = c;
  }
  const detail::ResidueSystem system(bound);
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbour_mask(v);
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  out.counts.assign(static_cast<std::size_t>(depth) + 1, 0);
  for (int k = 0; k <= depth; ++k) {
    const auto flat = subsets(n, k);
    const std::size_t count = k == 0 ? 1 : flat.size() / static_cast<std::size_t>(k);
    const int workers = detail::worker_count(threads, count);
    struct Worker {
      detail::MinorDeterminant det;
      detail::ResidueSum sum;
      std::vector<int> diag;
      std::vector<std::uint64_t> residues;
    };
    std::vector<Worker> pool;
    for (int w = 0; w < workers; ++w) {
      pool.push_back({detail::MinorDeterminant(system), detail::ResidueSum(system), std::vector<int>(64, 0),
                      std::vector<std::uint64_t>(static_cast<std::size_t>(system.size()))});
    }
    detail::parallel_for(count, workers, [&](std::size_t i, int w) {
      auto& wk = pool[static_cast<std::size_t>(w)];
      std::uint64_t removed = 0;
      for (int j = 0; j < k; ++j) removed |= std::uint64_t{1} << flat[i * static_cast<std::size_t>(k) + static_cast<std::size_t>(j)];
      const std::uint64_t kept = all & ~removed;
      const std::uint64_t rows = kept & (kept - 1);
      for (std::uint64_t r = rows; r != 0; r &= r - 1) {
        const int v = std::countr_zero(r);
        wk.diag[static_cast<std::size_t>(v)] = std::popcount(adj[static_cast<std::size_t>(v)] & kept);
      }
      wk.det.compute(adj, rows, wk.diag, wk.residues);
      wk.sum.add(wk.residues);
    });
    detail::ResidueSum total = pool[0].sum;
    for (std::size_t w = 1; w < pool.size(); ++w) total.merge(pool[w].sum);
    out.counts[static_cast<std::size_t>(k)] = total.value();
  }
  out.log_counts.clear();
  for (const auto& c : out.counts) {
    out.log_counts.push_back(c > 0 ? detail::log2_of(c) * std::log(2.0) : -std::numeric_limits<double>::infinity());
  }
  out.log_error_bound = 0.0;
}

// Every (n-k)-vertex induced subgraph of K_n is K_{n-k}.
void complete_top(int n, int depth, TopCensus& out) {
  out.counts.assign(static_cast<std::size_t>(depth) + 1, 0);
  out.log_counts.clear();
  for (int k = 0; k <= depth; ++k) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    const int m = n - k;
    if (m > 2) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(m - 2));
      c *= p;
    }
    out.log_counts.push_back(detail::log2_of(c) * std::log(2.0));
    out.counts[static_cast<std::size_t>(k)] = std::move(c);
  }
  out.log_error_bound = 0.0;
}

void log_top(const Graph& g, int depth, int threads, TopCensus& out) {
  const int n = g.order();
  out.log_counts.assign(static_cast<std::size_t>(depth) + 1, -std::numeric_limits<double>::infinity());
  double terms = 0.0;
  for (int k = 0; k <= depth; ++k) {
    const auto flat = subsets(n, k);
    const std::size_t count = k == 0 ? 1 : flat.size() / static_cast<std::size_t>(k);
    terms = std::max(terms, static_cast<double>(count));
    std::vector<double> logs(count);
    detail::parallel_for(count, threads, [&](std::size_t i, int) {
      std::vector<char> removed(static_cast<std::size_t>(n), 0);
      for (int j = 0; j < k; ++j) removed[static_cast<std::size_t>(flat[i * static_cast<std::size_t>(k) + static_cast<std::size_t>(j)])] = 1;
      std::vector<int> kept;
      kept.reserve(static_cast<std::size_t>(n - k));
      for (int v = 0; v < n; ++v) {
        if (!removed[static_cast<std::size_t>(v)]) kept.push_back(v);
      }
      logs[i] = detail::log_tau_induced(g, kept);
    });
    // Log-sum-exp in index order, so the result does not depend on scheduling.
    double top = -std::numeric_limits<double>::infinity();
    for (double l : logs) top = std::max(top, l);
    if (std::isinf(top)) continue;
    double s = 0.0;
    for (double l : logs) s += std::exp(l - top);
    out.log_counts[static_cast<std::size_t>(k)] = top + std::log(s);
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double m = static_cast<double>(n);
  out.log_error_bound = 10.0 * (m * m * eps + terms * eps);
}

}  // namespace

double TopCensus::ratio(int k) const {
  if (exact) return to_double(mpq_class(counts.at(static_cast<std::size_t>(k)), counts.at(0)));
  return std::exp(log_counts.at(static_cast<std::size_t>(k)) - log_counts.at(0));
}

TopCensus top_census(const Graph& g, int depth, const TopCensusOptions& options) {
  const int n = g.order();
  if (depth < 0 || depth >= n) throw std::invalid_argument("top_census: depth must lie in [0, n-1]");
  const bool complete = 2LL * g.edge_count() == static_cast<long long>(n) * (n - 1);
  if (complete) {
    TopCensus out;
    out.order = n;
    out.depth = depth;
    out.exact = true;
    complete_top(n, depth, out);
    return out;
  }
  const double work = binomial_double(n, depth);
  if (work > options.work_budget) {
    throw CapExceeded("top_census needs C(" + std::to_string(n) + "," + std::to_string(depth) +
                          ") deleted sets, above the work budget",
                      "--work-budget");
  }
  TopCensus out;
  out.order = n;
  out.depth = depth;
  out.exact = n <= std::min(options.exact_max_n, 64) && work <= options.exact_budget;
  if (out.exact) {
    exact_top(g, depth, options.threads, out);
  } else {
    log_top(g, depth, options.threads, out);
  }
  return out;
}

}  // namespace subtree
