#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <cmath>
#include <vector>

#include "subtree/detail/log_det.hpp"
#include "subtree/exact_count.hpp"

namespace subtree {

namespace {

// Fraction-free (Bareiss) determinant; every division is exact.
mpz_class bareiss_determinant(std::vector<mpz_class> a, std::size_t m) {
  if (m == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  mpz_class t;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (a[k * m + k] == 0) {
      std::size_t r = k + 1;
      while (r < m && a[r * m + k] == 0) ++r;
      if (r == m) return 0;
      for (std::size_t c = 0; c < m; ++c) std::swap(a[k * m + c], a[r * m + c]);
      sign = -sign;
    }
    const mpz_class& pivot = a[k * m + k];
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        t = a[i * m + j] * pivot - a[i * m + k] * a[k * m + j];
        mpz_divexact(a[i * m + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pivot;
  }
  mpz_class det = a[m * m - 1];
  if (sign < 0) det = -det;
  return det;
}

}  // namespace

mpz_class spanning_tree_count(const Multigraph& g) {
  const int n = g.order();
  if (n <= 1) return n == 1 ? 1 : 0;
  const auto m = static_cast<std::size_t>(n - 1);
  std::vector<mpz_class> lap(m * m, 0);
  for (int u = 1; u < n; ++u) {
    const auto r = static_cast<std::size_t>(u - 1);
    lap[r * m + r] = static_cast<long>(g.degree(u));
    for (int v = 1; v < n; ++v) {
      if (v != u) lap[r * m + static_cast<std::size_t>(v - 1)] = -static_cast<long>(g.multiplicity(u, v));
    }
  }
  return bareiss_determinant(std::move(lap), m);
}

mpz_class spanning_tree_count(const Graph& g) { return spanning_tree_count(Multigraph::from_graph(g)); }

double log_spanning_tree_count(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph("log spanning tree count is undefined for a disconnected graph");
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
  return detail::log_tau_induced(g, all);
}

namespace detail {

double log_tau_induced(const Graph& g, std::span<const int> kept) {
  const auto k = kept.size();
  if (k <= 1) return k == 1 ? 0.0 : -INFINITY;
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < k; ++i) index[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);
  const auto m = static_cast<Eigen::Index>(k - 1);
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(m, m);
  for (std::size_t i = 1; i < k; ++i) {
    const auto r = static_cast<Eigen::Index>(i - 1);
    double deg = 0.0;
    for (int w : g.neighbours(kept[i]).elements()) {
      const int j = index[static_cast<std::size_t>(w)];
      if (j < 0) continue;
      deg += 1.0;
      if (j > 0) lap(r, j - 1) = -1.0;
    }
    lap(r, r) = deg;
  }
  Eigen::LLT<Eigen::MatrixXd> llt(lap);
  if (llt.info() != Eigen::Success) return -INFINITY;
  const auto& l = llt.matrixLLT();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    const double d = l(i, i);
    if (!(d > 0.0)) return -INFINITY;
    sum += std::log(d);
  }
  return 2.0 * sum;
}

}  // namespace detail

}  // namespace subtree
