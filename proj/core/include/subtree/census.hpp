#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subtree {

/// Subtree counts by order: entry k (1-based) is s_k(G), the number of
/// k-vertex subtrees. The sum over all orders is T(G).
class Census {
 public:
  Census() = default;
  /// counts[0] is s_1.
  explicit Census(std::vector<mpz_class> counts) : counts_(std::move(counts)) {}

  int order() const { return static_cast<int>(counts_.size()); }
  const mpz_class& operator[](int k) const { return counts_.at(static_cast<std::size_t>(k - 1)); }
  std::span<const mpz_class> counts() const { return counts_; }
  mpz_class total() const;

  friend bool operator==(const Census& a, const Census& b) { return a.counts_ == b.counts_; }

 private:
  std::vector<mpz_class> counts_;
};

/// {"n":4,"counts":["4","6","12","16"]}
std::string to_json(const Census& census);
Census census_from_json(std::string_view text);

/// A probability held as a reduced fraction.
class ExactProbability {
 public:
  ExactProbability() = default;
  explicit ExactProbability(mpq_class value);

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  double to_double() const;
  /// "num/den"
  std::string to_string() const;

  friend bool operator==(const ExactProbability& a, const ExactProbability& b) { return a.value_ == b.value_; }

 private:
  mpq_class value_{0};
};

enum class Rounding { down, nearest, up };

/// Conversion of a rational to double, rounded in the given direction.
double to_double(const mpq_class& q, Rounding mode = Rounding::nearest);

}  // namespace subtree
