#include "subtree/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string>

namespace subtree {

namespace {

std::size_t word_count(int universe) {
  return (static_cast<std::size_t>(universe) + 63) / 64;
}

std::uint64_t tail_mask(int universe) {
  const int rem = universe & 63;
  return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

void require_positive(int value, const char* what) {
  if (value < 1) {
    throw std::invalid_argument(std::string(what) + " must be positive, got " + std::to_string(value));
  }
}

}  // namespace

// --- VertexSet ---------------------------------------------------------------

VertexSet::VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {
  if (universe < 0) throw std::invalid_argument("VertexSet universe must be nonnegative");
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > 64) throw std::invalid_argument("VertexSet::from_mask requires universe <= 64");
  VertexSet s(universe);
  if (universe > 0) s.words_[0] = mask & tail_mask(universe);
  return s;
}

VertexSet VertexSet::from_elements(int universe, std::span<const int> elements) {
  VertexSet s(universe);
  for (int v : elements) s.insert(v);
  return s;
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  if (!s.words_.empty()) s.words_.back() &= tail_mask(universe);
  return s;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= universe_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." + std::to_string(universe_ - 1));
  }
  words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= universe_) return;
  words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<int> VertexSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  if (other.universe_ < universe_) {
    // Anything beyond the other's universe must be empty.
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
      if ((words_[i] & ~theirs) != 0) return false;
    }
    return true;
  }
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  const std::size_t m = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < m; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.universe_ != universe_) throw std::invalid_argument("VertexSet universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  if (other.universe_ != universe_) throw std::invalid_argument("VertexSet universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  if (!out.words_.empty()) out.words_.back() &= tail_mask(universe_);
  return out;
}

// --- Graph -------------------------------------------------------------------

Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxVertices) + "]");
  }
  Graph g;
  g.n_ = n;
  g.adjacency_.assign(static_cast<std::size_t>(n), VertexSet(n));
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    auto& au = g.adjacency_[static_cast<std::size_t>(e.u)];
    if (au.contains(e.v)) continue;
    au.insert(e.v);
    g.adjacency_[static_cast<std::size_t>(e.v)].insert(e.u);
    ++g.edge_count_;
  }
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < n_; ++u) {
    for (int v : adjacency_[static_cast<std::size_t>(u)].elements()) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  auto e = edges();
  e.push_back({u, v});
  return build_graph(n_, e);
}

// --- Multigraph --------------------------------------------------------------

Multigraph::Multigraph(int n) : n_(n), mult_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
  if (n < 0) throw std::invalid_argument("Multigraph order must be nonnegative");
}

Multigraph Multigraph::from_graph(const Graph& g) {
  Multigraph m(g.order());
  for (const auto& e : g.edges()) m.add_edges(e.u, e.v);
  return m;
}

void Multigraph::add_edges(int u, int v, long long count) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::out_of_range("Multigraph vertex out of range");
  if (count < 0) throw std::invalid_argument("negative multiplicity");
  if (u == v) return;
  const auto nn = static_cast<std::size_t>(n_);
  mult_[static_cast<std::size_t>(u) * nn + static_cast<std::size_t>(v)] += count;
  mult_[static_cast<std::size_t>(v) * nn + static_cast<std::size_t>(u)] += count;
}

long long Multigraph::degree(int v) const {
  long long d = 0;
  for (int w = 0; w < n_; ++w) d += multiplicity(v, w);
  return d;
}

// --- named families ----------------------------------------------------------

Graph complete_graph(int n) {
  require_positive(n, "complete graph order");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return build_graph(n, e);
}

Graph complete_bipartite_graph(int m, int n) {
  require_positive(m, "bipartite side size");
  require_positive(n, "bipartite side size");
  std::vector<Edge> e;
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < n; ++v) e.push_back({u, m + v});
  return build_graph(m + n, e);
}

Graph path_graph(int n) {
  require_positive(n, "path order");
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return build_graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle order must be at least 3, got " + std::to_string(n));
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  e.push_back({n - 1, 0});
  return build_graph(n, e);
}

Graph star_graph(int n) {
  require_positive(n, "star order");
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.push_back({0, v});
  return build_graph(n, e);
}

Graph clique_pendant_path(int clique_n, int path_len) {
  require_positive(clique_n, "clique order");
  require_positive(path_len, "path length");
  std::vector<Edge> e;
  for (int u = 0; u < clique_n; ++u)
    for (int v = u + 1; v < clique_n; ++v) e.push_back({u, v});
  int prev = 0;
  for (int i = 0; i < path_len; ++i) {
    e.push_back({prev, clique_n + i});
    prev = clique_n + i;
  }
  return build_graph(clique_n + path_len, e);
}

Graph clique_path_clique(int clique_n, int path_len) {
  require_positive(clique_n, "clique order");
  require_positive(path_len, "path length");
  std::vector<Edge> e;
  for (int base : {0, clique_n})
    for (int u = 0; u < clique_n; ++u)
      for (int v = u + 1; v < clique_n; ++v) e.push_back({base + u, base + v});
  int prev = 0;
  for (int i = 0; i < path_len; ++i) {
    e.push_back({prev, 2 * clique_n + i});
    prev = 2 * clique_n + i;
  }
  e.push_back({prev, clique_n});
  return build_graph(2 * clique_n + path_len, e);
}

Graph named_graph(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::complete: return complete_graph(spec.a);
    case Family::complete_bipartite: return complete_bipartite_graph(spec.a, spec.b);
    case Family::path: return path_graph(spec.a);
    case Family::cycle: return cycle_graph(spec.a);
    case Family::star: return star_graph(spec.a);
    case Family::clique_pendant_path: return clique_pendant_path(spec.a, spec.b);
    case Family::clique_path_clique: return clique_path_clique(spec.a, spec.b);
  }
  throw std::invalid_argument("unknown graph family");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::star: return "star";
    case Family::clique_pendant_path: return "clique_pendant_path";
    case Family::clique_path_clique: return "clique_path_clique";
  }
  return "unknown";
}

FamilySpec parse_family(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("expected <family>:<sizes>, got '" + text + "'");
  const std::string name = text.substr(0, colon);
  std::vector<int> sizes;
  std::size_t pos = colon + 1;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    int value = 0;
    const auto* first = text.data() + pos;
    const auto* last = text.data() + comma;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) throw std::invalid_argument("bad size in '" + text + "'");
    sizes.push_back(value);
    pos = comma + 1;
  }
  static constexpr Family kAll[] = {Family::complete, Family::complete_bipartite, Family::path,
                                    Family::cycle, Family::star, Family::clique_pendant_path,
                                    Family::clique_path_clique};
  for (Family f : kAll) {
    if (family_name(f) != name) continue;
    const bool two = f == Family::complete_bipartite || f == Family::clique_pendant_path ||
                     f == Family::clique_path_clique;
    if (sizes.size() != (two ? 2U : 1U)) throw std::invalid_argument("wrong number of sizes for " + name);
    return {f, sizes[0], two ? sizes[1] : 0};
  }
  throw std::invalid_argument("unknown graph family '" + name + "'");
}

// --- structure ---------------------------------------------------------------

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (!s.is_subset_of(VertexSet::full(g.order()))) {
    throw std::invalid_argument("vertex set is not a subset of the graph's vertices");
  }
  InducedSubgraph out;
  out.original = s.elements();
  if (out.original.empty()) throw std::invalid_argument("induced subgraph on an empty vertex set");
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) index[static_cast<std::size_t>(out.original[i])] = static_cast<int>(i);
  std::vector<Edge> e;
  for (const auto& edge : g.edges()) {
    const int a = index[static_cast<std::size_t>(edge.u)];
    const int b = index[static_cast<std::size_t>(edge.v)];
    if (a >= 0 && b >= 0) e.push_back({a, b});
  }
  out.graph = build_graph(static_cast<int>(out.original.size()), e);
  return out;
}

Multigraph contract_connected_set(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw std::invalid_argument("vertex set universe does not match graph");
  if (s.empty()) throw std::invalid_argument("cannot contract an empty vertex set");
  if (!is_connected_subset(g, s)) throw std::invalid_argument("contracted vertex set must induce a connected subgraph");
  std::vector<int> index(static_cast<std::size_t>(g.order()), 0);
  int next = 1;
  for (int v = 0; v < g.order(); ++v) {
    if (!s.contains(v)) index[static_cast<std::size_t>(v)] = next++;
  }
  Multigraph m(next);
  for (const auto& e : g.edges()) {
    m.add_edges(index[static_cast<std::size_t>(e.u)], index[static_cast<std::size_t>(e.v)]);
  }
  return m;
}

namespace {

// Vertices reachable from `start` inside `allowed`.
VertexSet reach(const Graph& g, int start, const VertexSet& allowed) {
  VertexSet seen(g.order());
  std::vector<int> stack{start};
  seen.insert(start);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbours(v).elements()) {
      if (allowed.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_connected_subset(const Graph& g, const VertexSet& s) {
  const auto elems = s.elements();
  if (elems.empty()) return false;
  return reach(g, elems.front(), s).size() == static_cast<int>(elems.size());
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return is_connected_subset(g, VertexSet::full(g.order()));
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats st;
  if (g.order() == 0) return st;
  st.min_degree = g.degree(0);
  st.max_degree = st.min_degree;
  for (int v = 1; v < g.order(); ++v) {
    st.min_degree = std::min(st.min_degree, g.degree(v));
    st.max_degree = std::max(st.max_degree, g.degree(v));
  }
  st.connected = is_connected(g);
  return st;
}

int largest_component_size(const Graph& g) {
  VertexSet unseen = VertexSet::full(g.order());
  int best = 0;
  while (!unseen.empty()) {
    const int start = unseen.elements().front();
    const VertexSet comp = reach(g, start, unseen);
    best = std::max(best, comp.size());
    for (int v : comp.elements()) unseen.erase(v);
  }
  return best;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("permutation size mismatch");
  std::vector<Edge> e;
  for (const auto& edge : g.edges()) {
    e.push_back({perm[static_cast<std::size_t>(edge.u)], perm[static_cast<std::size_t>(edge.v)]});
  }
  return build_graph(g.order(), e);
}

}  // namespace subtree
