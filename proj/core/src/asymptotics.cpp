#include "subtree/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "subtree/census.hpp"

namespace subtree {

namespace {

mpz_class power(long base, long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return r;
}

mpz_class factorial(long k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

double dense_limit(double p) {
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("dense_limit: p must lie in (0, 1]");
  return std::exp(-1.0 / (std::numbers::e * p));
}

double bipartite_limit() { return std::exp(-2.0 / std::numbers::e); }

double poisson_ratio_target(int k, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("poisson_ratio_target: p must be positive");
  if (k < 0) throw std::invalid_argument("poisson_ratio_target: k must be nonnegative");
  return std::exp(-std::lgamma(k + 1.0) - k * std::log(std::numbers::e * p));
}

mpq_class eq1_bound_exact(int n, int delta, int k) {
  if (k < 0 || k >= delta) throw std::invalid_argument("eq1_bound: need 0 <= k < delta");
  mpq_class q(power(n, k), power(delta - k, k) * factorial(k));
  q.canonicalize();
  return q;
}

double eq1_bound(int n, int delta, int k) { return to_double(eq1_bound_exact(n, delta, k), Rounding::up); }

mpq_class tail_final_term(int n, int delta) {
  if (delta < 1) throw std::invalid_argument("tail bound needs delta >= 1");
  const int m = delta / 2;
  mpz_class num = power(n, m);
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  mpq_class q(num, power(delta - m, m) * factorial(m));
  q.canonicalize();
  return q;
}

mpq_class tail_bound_exact(int n, int delta, int start) {
  if (delta < 1) throw std::invalid_argument("tail bound needs delta >= 1");
  const int m = delta / 2;
  if (start < 0 || start > m) throw std::invalid_argument("tail bound needs 0 <= K <= floor(delta/2)");
  mpq_class sum = tail_final_term(n, delta);
  for (int k = start; k <= m; ++k) sum += eq1_bound_exact(n, delta, k);
  return sum;
}

double tail_bound(int n, int delta, int start) { return to_double(tail_bound_exact(n, delta, start), Rounding::up); }

double janson_statistic(double log_sn, int n, double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("janson_statistic: p must lie in (0, 1)");
  if (n < 2) throw std::invalid_argument("janson_statistic: n must be at least 2");
  const double centre = (n - 2) * std::log(static_cast<double>(n)) + (n - 1) * std::log(p);
  return std::sqrt(p) * (log_sn - centre + (1.0 - p) / p);
}

ChernoffBounds chernoff_bounds(double mu, double t) {
  if (!(mu > 0.0)) throw std::invalid_argument("chernoff_bounds: mu must be positive");
  if (t < 0.0) throw std::invalid_argument("chernoff_bounds: t must be nonnegative");
  return {std::exp(-t * t / (2.0 * mu)), std::exp(-t * t / (2.0 * (mu + t / 3.0)))};
}

double sparse_envelope(double p, double c) {
  if (!(p > 0.0) || !(c > 0.0)) throw std::invalid_argument("sparse_envelope: p and c must be positive");
  return std::exp(-c / p);
}

}  // namespace subtree
