#include "subtree/census.hpp"

#include <mpfr.h>

#include <json.hpp>
#include <stdexcept>

namespace subtree {

mpz_class Census::total() const {
  mpz_class sum = 0;
  for (const auto& c : counts_) sum += c;
  return sum;
}

std::string to_json(const Census& census) {
  nlohmann::ordered_json j;
  j["n"] = census.order();
  auto& counts = j["counts"] = nlohmann::ordered_json::array();
  for (const auto& c : census.counts()) counts.push_back(c.get_str());
  return j.dump();
}

Census census_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  const int n = j.at("n").get<int>();
  const auto& arr = j.at("counts");
  if (!arr.is_array() || static_cast<int>(arr.size()) != n) {
    throw std::invalid_argument("census JSON: counts must be an array of length n");
  }
  std::vector<mpz_class> counts;
  counts.reserve(arr.size());
  for (const auto& item : arr) {
    mpz_class value;
    if (!item.is_string() || value.set_str(item.get<std::string>(), 10) != 0 || value < 0) {
      throw std::invalid_argument("census JSON: counts must be nonnegative decimal strings");
    }
    counts.push_back(std::move(value));
  }
  return Census(std::move(counts));
}

ExactProbability::ExactProbability(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ < 0 || value_ > 1) throw std::invalid_argument("probability outside [0,1]: " + value_.get_str());
}

double ExactProbability::to_double() const { return subtree::to_double(value_); }

std::string ExactProbability::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

double to_double(const mpq_class& q, Rounding mode) {
  const mpfr_rnd_t rnd = mode == Rounding::down ? MPFR_RNDD : mode == Rounding::up ? MPFR_RNDU : MPFR_RNDN;
  mpfr_t x;
  mpfr_init2(x, 53);
  mpfr_set_q(x, q.get_mpq_t(), rnd);
  const double d = mpfr_get_d(x, rnd);
  mpfr_clear(x);
  return d;
}

}  // namespace subtree
