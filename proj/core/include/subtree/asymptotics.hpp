#pragma once

#include <gmpxx.h>

namespace subtree {

/// e^{-1/(e p)}, the limit of P(G(n,p)) for fixed p. Requires 0 < p <= 1.
double dense_limit(double p);
/// e^{-2/e}, the limit of P(K_{n,n}); equals dense_limit(1/2).
double bipartite_limit();

/// 1 / (k! (e p)^k), the limiting value of s_{n-k}/s_n.
double poisson_ratio_target(int k, double p);

/// n^k / ((delta-k)^k k!), exact. Requires 0 <= k < delta.
mpq_class eq1_bound_exact(int n, int delta, int k);
/// eq1_bound_exact rounded up to a double.
double eq1_bound(int n, int delta, int k);

/// Bound on sum_{k >= K} s_{n-k}/s_n for a graph of order n and minimum
/// degree delta: sum_{K <= k <= m} eq1_bound(n, delta, k) plus
/// 2^n n^m / ((delta-m)^m m!), with m = floor(delta/2). Requires
/// 0 <= K <= m and delta >= 1.
mpq_class tail_bound_exact(int n, int delta, int start);
/// The final term alone: 2^n n^m / ((delta-m)^m m!).
mpq_class tail_final_term(int n, int delta);
/// tail_bound_exact rounded up to a double (+infinity on overflow).
double tail_bound(int n, int delta, int start);

/// p^{1/2} (log s_n - log(n^{n-2} p^{n-1}) + (1-p)/p); approximately
/// N(0, 2(1-p)) for G(n,p). Requires 0 < p < 1 and n >= 2.
double janson_statistic(double log_sn, int n, double p);

struct ChernoffBounds {
  /// exp(-t^2 / (2 mu)), for P(X <= mu - t).
  double lower_tail = 1.0;
  /// exp(-t^2 / (2 (mu + t/3))), for P(X >= mu + t).
  double upper_tail = 1.0;
};

/// Binomial tail bounds with mean mu > 0 and deviation t >= 0.
ChernoffBounds chernoff_bounds(double mu, double t);

/// e^{-c/p} for a caller-supplied (fitted) constant c.
double sparse_envelope(double p, double c);

}  // namespace subtree
