#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "subtree/census.hpp"
#include "subtree/errors.hpp"
#include "subtree/graph.hpp"

namespace subtree {

inline constexpr int kDefaultExactCensusCap = 24;
/// Connected-subset enumeration works on single-word vertex masks.
inline constexpr int kExactCensusHardCap = 64;
inline constexpr int kBruteForceCensusCap = 10;
inline constexpr int kPairOracleCap = 9;

struct CountOptions {
  /// Largest order accepted by subtree_census and pair_count (--max-exact-n).
  int max_exact_n = kDefaultExactCensusCap;
  int threads = 1;
};

// --- spanning trees ----------------------------------------------------------

/// Exact number of spanning trees via fraction-free elimination on the
/// reduced Laplacian. 0 when disconnected, 1 for a single vertex.
mpz_class spanning_tree_count(const Graph& g);
mpz_class spanning_tree_count(const Multigraph& g);

/// Natural log of the spanning tree count, from a floating Cholesky
/// factorisation. Throws DisconnectedGraph when the count is zero.
double log_spanning_tree_count(const Graph& g);

// --- censuses ----------------------------------------------------------------

/// s_k(G) = sum over connected k-sets S of tau(G[S]). Throws CapExceeded when
/// the order is above options.max_exact_n.
Census subtree_census(const Graph& g, const CountOptions& options = {});

/// Independent oracle: enumerates every subtree as an explicit edge set.
/// Orders up to kBruteForceCensusCap.
Census brute_force_census(const Graph& g);

/// s_k(K_n) = C(n,k) k^(k-2).
Census complete_census(int n);
/// Subtrees of K_{m,n} with i vertices on one side and j on the other number
/// C(m,i) C(n,j) j^(i-1) i^(j-1).
Census complete_bipartite_census(int m, int n);
/// Dispatches to the closed forms; only complete and complete_bipartite.
Census closed_form_census(const FamilySpec& spec);

/// P(G) = s_n / T(G); zero for a disconnected graph.
ExactProbability spanning_probability(const Census& census);
ExactProbability spanning_probability(const Graph& g, const CountOptions& options = {});

/// Average number of edges of a uniformly random subtree.
mpq_class mean_subtree_edges(const Census& census);

/// Checks s_1 + ... + s_r <= 2^r s_r for every r with s_r > 0.
struct PrefixBoundCheck {
  bool pass = true;
  int first_violation = 0;  // 0 when pass
};
PrefixBoundCheck prefix_bound_check(const Census& census);

// --- top of the census -------------------------------------------------------

struct TopCensusOptions {
  /// Exact integers only up to this order...
  int exact_max_n = 64;
  /// ...and while C(n, depth) stays within this many deleted sets.
  double exact_budget = 1e6;
  /// Hard limit on C(n, depth) in either mode. Complete graphs bypass the
  /// enumeration through the closed form.
  double work_budget = 1e6;
  int threads = 1;
};

/// s_{n-k}(G) for k = 0..depth, via s_{n-k} = sum over k-sets U of tau(G - U).
struct TopCensus {
  int order = 0;
  int depth = 0;
  /// True when `counts` holds exact integers; otherwise only `log_counts`.
  bool exact = false;
  /// counts[k] = s_{n-k}.
  std::vector<mpz_class> counts;
  /// log_counts[k] = ln s_{n-k}; -infinity when the count is zero.
  std::vector<double> log_counts;
  /// Upper bound on the absolute error of each log_counts entry (0 when exact).
  double log_error_bound = 0.0;

  /// s_{n-k}/s_n as a double.
  double ratio(int k) const;
};

TopCensus top_census(const Graph& g, int depth, const TopCensusOptions& options = {});

// --- pair counts -------------------------------------------------------------

/// Number of pairs (S, T): T a spanning tree, S a subtree of T with n-k vertices.
struct PairCount {
  int k = 0;
  mpz_class value;
};

/// Sums tau(G[S]) * tau(G/S) over connected (n-k)-sets S.
PairCount pair_count(const Graph& g, int k, const CountOptions& options = {});
/// Independent route: sums s_{n-k}(T) over explicitly enumerated spanning
/// trees T. Orders up to kPairOracleCap.
PairCount pair_count_oracle(const Graph& g, int k);

/// (delta-k)^k s_{n-k} <= P_k <= C(n,k) s_n.
struct SandwichReport {
  int k = 0;
  mpz_class lower;
  mpz_class value;
  mpz_class upper;
  bool pass = false;
};

SandwichReport sandwich_report(const Graph& g, int k, const CountOptions& options = {});
SandwichReport sandwich_report(const Graph& g, const Census& census, int k, const CountOptions& options = {});

// --- certified intervals -----------------------------------------------------

struct CertifiedInterval {
  double lower = 0.0;
  double upper = 1.0;
  int truncation_depth = 0;
  /// True when every ingredient was exact (a proof-grade enclosure); false
  /// when log-domain ratios were used and the interval was widened instead.
  bool certified = false;
  /// Tail bound B added to the truncated sum for the lower endpoint.
  double tail = 0.0;
  /// Sum of r_k = s_{n-k}/s_n for k < truncation_depth.
  double head = 0.0;

  double midpoint() const { return 0.5 * (lower + upper); }
  double relative_width() const;
  bool contains(double p) const { return lower <= p && p <= upper; }
};

struct IntervalOptions {
  TopCensusOptions top;
  /// Cap for the K >= n route, which needs a full census.
  int max_exact_n = kDefaultExactCensusCap;
};

/// Encloses P(G) between 1/(head + B) and 1/head, where head sums the first
/// `depth` ratios r_k and B bounds the remaining ones. Requires G connected
/// and 1 <= depth < delta/2, or depth >= n (full census, zero-width interval).
CertifiedInterval certified_probability_interval(const Graph& g, int depth, const IntervalOptions& options = {});

}  // namespace subtree
