#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "subtree/graph.hpp"
#include "subtree/tree_tools.hpp"

namespace subtree {

/// Identity of the pseudorandom stream; written into every report.
inline constexpr std::string_view kGeneratorId = "mt19937_64+splitmix64/v1";

struct Seed {
  std::uint64_t value = 0;
  friend bool operator==(const Seed&, const Seed&) = default;
};

struct GnpParams {
  int n = 1;
  double p = 0.0;
};

/// Throws std::invalid_argument unless n >= 1 and 0 <= p <= 1.
void validate(const GnpParams& params);

/// Seeded engine with conversions that do not depend on the standard
/// library's distribution implementations.
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed.value) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// One draw; true with probability p.
  bool bernoulli(double p) { return uniform() < p; }
  /// Uniform on [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Per-trial seed: splitmix64 of master + (index + 1) * golden gamma.
Seed trial_seed(Seed master, std::uint64_t index);

/// G(n,p): one Bernoulli draw per pair, pairs in lexicographic order.
Graph sample_gnp(const GnpParams& params, Seed seed);

/// Statistics of a G(n,p) sample too large for Graph (n beyond the vertex
/// cap). Consumes the stream exactly as sample_gnp does.
struct GnpSummary {
  int n = 0;
  std::int64_t edge_count = 0;
  int min_degree = 0;
  int max_degree = 0;
  int largest_component = 0;
};

GnpSummary sample_gnp_summary(const GnpParams& params, Seed seed);

/// Uniform over the n^(n-2) labelled trees, by decoding a uniform Prufer word.
LabelledTree sample_uniform_labelled_tree(int n, Seed seed);

/// Uniform over the spanning trees of a connected graph (Wilson's
/// loop-erased walks, rooted at vertex 0). Throws DisconnectedGraph.
LabelledTree sample_uniform_spanning_tree(const Graph& g, Seed seed);

}  // namespace subtree
