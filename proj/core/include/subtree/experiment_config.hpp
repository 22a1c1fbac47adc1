#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "subtree/random_models.hpp"

namespace subtree {

/// Edge probability as a function of n. Presets only:
///   "0.5"      constant
///   "log:c"    c log(n) / n
///   "sqrt:c"   c / sqrt(n)
/// Values are clamped to [0, 1].
class PSchedule {
 public:
  enum class Kind { constant, log, sqrt };

  PSchedule() = default;
  static PSchedule parse(const std::string& text);

  double at(int n) const;
  Kind kind() const { return kind_; }
  double coefficient() const { return c_; }
  const std::string& text() const { return text_; }

 private:
  Kind kind_ = Kind::constant;
  double c_ = 0.5;
  std::string text_ = "0.5";
};

struct ExperimentConfig {
  std::string name;
  std::vector<int> n_grid;
  std::vector<PSchedule> p_grid;
  int trials = 0;
  Seed master{20240601};
  /// Exact-census cap (--max-exact-n).
  int max_exact_n = 24;
  int threads = 1;
  /// Largest k (poisson_ratios, pair_identities) or truncation depth (gnp_dense).
  int k = 0;
  std::string out;
  std::string format = "csv";
};

/// Flat "key = value" lines; '#' starts a comment. Keys are the CLI flag
/// names without dashes (n, p, trials, seed, out, format, threads,
/// max-exact-n, k). Throws std::invalid_argument on malformed lines.
std::map<std::string, std::string> parse_config_text(std::istream& in);
std::map<std::string, std::string> parse_config_file(const std::string& path);

/// Overwrites the fields named in `settings`; throws std::invalid_argument
/// on unknown keys or bad values.
void apply_settings(ExperimentConfig& config, const std::map<std::string, std::string>& settings);

std::vector<int> parse_int_list(const std::string& text);

}  // namespace subtree
