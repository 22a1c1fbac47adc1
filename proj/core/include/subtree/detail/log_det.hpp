#pragma once

#include <span>

#include "subtree/graph.hpp"

namespace subtree::detail {

/// ln tau(G[kept]) by Cholesky of the Laplacian of the induced subgraph with
/// its first vertex removed. `kept` must be sorted. Returns -infinity when
/// the induced subgraph is disconnected.
double log_tau_induced(const Graph& g, std::span<const int> kept);

}  // namespace subtree::detail
