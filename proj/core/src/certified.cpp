#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "subtree/asymptotics.hpp"
#include "subtree/detail/modular.hpp"
#include "subtree/exact_count.hpp"

namespace subtree {

namespace {

// sum_{k > m} C(n,k) (n-k)^(n-k-2): every (n-k)-vertex subtree count is at
// most that of the complete graph.
mpz_class complete_dominance(int n, int m) {
  mpz_class sum = 0;
  mpz_class c;
  mpz_class p;
  for (int k = m + 1; k <= n - 1; ++k) {
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    const int s = n - k;
    if (s > 2) {
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(s), static_cast<unsigned long>(s - 2));
      c *= p;
    }
    sum += c;
  }
  return sum;
}

}  // namespace

double CertifiedInterval::relative_width() const {
  const double mid = midpoint();
  return mid > 0.0 ? (upper - lower) / mid : INFINITY;
}

CertifiedInterval certified_probability_interval(const Graph& g, int depth, const IntervalOptions& options) {
  const int n = g.order();
  const auto stats = degree_stats(g);
  if (!stats.connected) throw DisconnectedGraph("certified_probability_interval needs a connected graph");

  CertifiedInterval out;
  out.truncation_depth = depth;

  if (depth >= n) {
    const auto census = subtree_census(g, {options.max_exact_n, options.top.threads});
    const mpq_class p(census[n], census.total());
    out.lower = to_double(p, Rounding::down);
    out.upper = to_double(p, Rounding::up);
    out.certified = true;
    out.head = to_double(mpq_class(census.total(), census[n]));
    return out;
  }

  const int delta = stats.min_degree;
  if (depth < 1 || 2 * depth >= delta) {
    throw std::invalid_argument("certified_probability_interval: need 1 <= K < delta/2 (delta = " +
                                std::to_string(delta) + ", K = " + std::to_string(depth) + ") or K >= n");
  }
  const int m = delta / 2;

  // Terms K..m from the per-k bound; the rest from the smaller of the
  // final-regime term and complete-graph dominance.
  mpq_class middle = 0;
  for (int k = depth; k <= m; ++k) middle += eq1_bound_exact(n, delta, k);
  const mpq_class final_term = tail_final_term(n, delta);
  const mpz_class dominance = complete_dominance(n, m);

  const auto top = top_census(g, depth - 1, options.top);
  if (top.exact) {
    mpq_class head = 0;
    for (int k = 0; k < depth; ++k) head += mpq_class(top.counts[static_cast<std::size_t>(k)], top.counts[0]);
    head.canonicalize();
    mpq_class rest(dominance, top.counts[0]);
    rest.canonicalize();
    const mpq_class tail = middle + std::min(final_term, rest);
    out.lower = to_double(1 / (head + tail), Rounding::down);
    out.upper = std::min(1.0, to_double(1 / head, Rounding::up));
    out.tail = to_double(tail, Rounding::up);
    out.head = to_double(head);
    out.certified = true;
    return out;
  }

  // Log-domain ratios: widen by the documented error bound, not a proof.
  const double err = 2.0 * top.log_error_bound;
  double head = 0.0;
  for (int k = 0; k < depth; ++k) head += top.ratio(k);
  const double head_low = head * std::exp(-err) * (1.0 - 1e-15 * depth);
  const double head_high = head * std::exp(err) * (1.0 + 1e-15 * depth);
  const double log_sn_low = top.log_counts[0] - top.log_error_bound;
  const double rest = std::exp(detail::log2_of(dominance) * std::numbers::ln2 - log_sn_low);
  const double tail = to_double(middle, Rounding::up) + std::min(to_double(final_term, Rounding::up), rest);
  out.lower = 1.0 / (head_high + tail);
  out.upper = std::min(1.0, 1.0 / head_low);
  out.tail = tail;
  out.head = head;
  out.certified = false;
  return out;
}

}  // namespace subtree
