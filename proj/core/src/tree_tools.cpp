#include "subtree/tree_tools.hpp"

#include <algorithm>
#include <iostream>
#include <json.hpp>
#include <numeric>
#include <stdexcept>

namespace subtree {

namespace {

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return c;
}

}  // namespace

LabelledTree LabelledTree::from_edges(int n, std::span<const Edge> edges) {
  if (n < 1) throw std::invalid_argument("tree order must be positive");
  if (static_cast<int>(edges.size()) != n - 1) throw std::invalid_argument("a tree on n vertices has n-1 edges");
  LabelledTree t;
  t.n_ = n;
  t.adj_.assign(static_cast<std::size_t>(n), {});
  std::vector<int> root(static_cast<std::size_t>(n));
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[static_cast<std::size_t>(x)] != x) {
      root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
      x = root[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (auto e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) throw std::invalid_argument("bad tree edge");
    const int a = find(e.u);
    const int b = find(e.v);
    if (a == b) throw std::invalid_argument("tree edges contain a cycle");
    root[static_cast<std::size_t>(a)] = b;
    if (e.u > e.v) std::swap(e.u, e.v);
    t.edges_.push_back(e);
    t.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    t.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::sort(t.edges_.begin(), t.edges_.end());
  for (auto& a : t.adj_) std::sort(a.begin(), a.end());
  return t;
}

LabelledTree LabelledTree::from_parents(std::span<const int> parent) {
  const int n = static_cast<int>(parent.size());
  std::vector<Edge> edges;
  int roots = 0;
  for (int v = 0; v < n; ++v) {
    const int p = parent[static_cast<std::size_t>(v)];
    if (p < 0) {
      ++roots;
    } else {
      edges.push_back({p, v});
    }
  }
  if (roots != 1) throw std::invalid_argument("parent array must have exactly one root");
  return from_edges(n, edges);
}

std::vector<int> LabelledTree::parents(int root) const {
  std::vector<int> parent(static_cast<std::size_t>(n_), -2);
  parent[static_cast<std::size_t>(root)] = -1;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj_[static_cast<std::size_t>(v)]) {
      if (parent[static_cast<std::size_t>(w)] != -2) continue;
      parent[static_cast<std::size_t>(w)] = v;
      stack.push_back(w);
    }
  }
  return parent;
}

Graph LabelledTree::graph() const { return build_graph(n_, edges_); }

Census tree_subtree_polynomial(const LabelledTree& t) {
  const int n = t.order();
  if (n == 0) throw std::invalid_argument("empty tree");
  const auto parent = t.parents(0);
  // Vertices in DFS preorder, processed in reverse so children come first.
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : t.neighbours(v)) {
      if (w != parent[static_cast<std::size_t>(v)]) stack.push_back(w);
    }
  }
  // f[v][j] = number of subtrees with j+1 vertices whose top vertex is v.
  std::vector<std::vector<mpz_class>> f(static_cast<std::size_t>(n));
  std::vector<mpz_class> counts(static_cast<std::size_t>(n), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    std::vector<mpz_class> poly{1};
    for (int c : t.neighbours(v)) {
      if (c == parent[static_cast<std::size_t>(v)]) continue;
      const auto& child = f[static_cast<std::size_t>(c)];
      // poly *= (1 + x * child)
      std::vector<mpz_class> next(poly.size() + child.size(), 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i];
        for (std::size_t j = 0; j < child.size(); ++j) next[i + j + 1] += poly[i] * child[j];
      }
      poly = std::move(next);
      f[static_cast<std::size_t>(c)].clear();
      f[static_cast<std::size_t>(c)].shrink_to_fit();
    }
    for (std::size_t j = 0; j < poly.size(); ++j) counts[j] += poly[j];
    f[static_cast<std::size_t>(v)] = std::move(poly);
  }
  return Census(std::move(counts));
}

int leaf_count(const LabelledTree& t) {
  if (t.order() < 2) {
    std::clog << "warning: leaf_count of a single-vertex tree is taken as 0\n";
    return 0;
  }
  int leaves = 0;
  for (int v = 0; v < t.order(); ++v) leaves += t.degree(v) == 1 ? 1 : 0;
  return leaves;
}

LeafSandwich leaf_sandwich_check(const LabelledTree& t, const Census& census, int k) {
  const int n = t.order();
  if (k < 0 || k > n - 1) throw std::invalid_argument("leaf_sandwich_check: k must lie in [0, n-1]");
  const int l = n < 2 ? 0 : leaf_count(t);
  LeafSandwich r;
  r.k = k;
  r.lower = binomial(l, k);
  r.value = census[n - k];
  r.upper = k == 0 ? mpz_class(1) : binomial(l + k - 1, k);
  r.pass = r.lower <= r.value && r.value <= r.upper;
  return r;
}

LeafSandwich leaf_sandwich_check(const LabelledTree& t, int k) {
  return leaf_sandwich_check(t, tree_subtree_polynomial(t), k);
}

std::vector<int> prufer_encode(const LabelledTree& t) {
  const int n = t.order();
  if (n < 2) throw std::invalid_argument("prufer_encode needs at least two vertices");
  const auto parent = t.parents(n - 1);
  std::vector<int> degree(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) degree[static_cast<std::size_t>(v)] = t.degree(v);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  int ptr = 0;
  while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
  int leaf = ptr;
  for (auto& symbol : code) {
    const int next = parent[static_cast<std::size_t>(leaf)];
    symbol = next;
    if (--degree[static_cast<std::size_t>(next)] == 1 && next < ptr) {
      leaf = next;
    } else {
      ++ptr;
      while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
      leaf = ptr;
    }
  }
  return code;
}

LabelledTree prufer_decode(std::span<const int> sequence, int n) {
  if (n < 2) throw std::invalid_argument("prufer_decode needs n >= 2");
  if (static_cast<int>(sequence.size()) != n - 2) throw std::invalid_argument("Prufer sequence must have length n-2");
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int s : sequence) {
    if (s < 0 || s >= n) throw std::invalid_argument("Prufer symbol out of range");
    ++degree[static_cast<std::size_t>(s)];
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  int ptr = 0;
  while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
  int leaf = ptr;
  for (int v : sequence) {
    edges.push_back({leaf, v});
    if (--degree[static_cast<std::size_t>(v)] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back({leaf, n - 1});
  return LabelledTree::from_edges(n, edges);
}

mpz_class surjection_count(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("surjection_count: negative argument");
  if (b > a) return 0;
  mpz_class total = 0;
  mpz_class power;
  for (int i = 0; i <= b; ++i) {
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(b - i), static_cast<unsigned long>(a));
    const mpz_class term = binomial(b, i) * power;
    if (i % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

mpz_class trees_with_leaf_count(int n, int leaves) {
  if (n < 2) throw std::invalid_argument("trees_with_leaf_count needs n >= 2");
  if (leaves < 0 || leaves > n) throw std::invalid_argument("leaf count out of range");
  return binomial(n, leaves) * surjection_count(n - 2, n - leaves);
}

mpz_class leaf_deficient_tree_bound(int n, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  if (n < 2) throw std::invalid_argument("leaf_deficient_tree_bound needs n >= 2");
  if (beta > 1.0) {
    mpz_class all;
    mpz_ui_pow_ui(all.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n - 2));
    return all;
  }
  mpz_class total = 0;
  for (int l = 0; l <= n && static_cast<double>(l) < beta * n; ++l) total += trees_with_leaf_count(n, l);
  return total;
}

RootedForest::RootedForest(std::vector<int> parent) : parent_(std::move(parent)) {
  const int n = size();
  for (int p : parent_) {
    if (p < -1 || p >= n) throw std::invalid_argument("forest parent out of range");
  }
  // Follow parent chains; a chain longer than n revisits a node.
  for (int v = 0; v < n; ++v) {
    int x = v;
    for (int steps = 0; x != -1; ++steps) {
      if (steps > n) throw std::invalid_argument("forest parent pointers contain a cycle");
      x = parent_[static_cast<std::size_t>(x)];
    }
  }
}

std::vector<int> RootedForest::subtree_sizes() const {
  const int n = size();
  std::vector<int> sizes(static_cast<std::size_t>(n), 1);
  for (int v = 0; v < n; ++v) {
    for (int x = parent_[static_cast<std::size_t>(v)]; x != -1; x = parent_[static_cast<std::size_t>(x)]) {
      ++sizes[static_cast<std::size_t>(x)];
    }
  }
  return sizes;
}

mpz_class forest_linear_extensions(const RootedForest& f) {
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(f.size()));
  mpz_class denom = 1;
  for (int s : f.subtree_sizes()) denom *= s;
  mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), denom.get_mpz_t());
  return result;
}

mpz_class linear_extensions_oracle(const RootedForest& f) {
  const int n = f.size();
  if (n > 8) throw std::invalid_argument("linear_extensions_oracle is limited to 8 nodes");
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  long count = 0;
  auto place = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      ++count;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      const int p = f.parent(v);
      if (p != -1 && !placed[static_cast<std::size_t>(p)]) continue;
      placed[static_cast<std::size_t>(v)] = 1;
      self(self, depth + 1);
      placed[static_cast<std::size_t>(v)] = 0;
    }
  };
  place(place, 0);
  return count;
}

std::string to_json(const LabelledTree& t) {
  nlohmann::ordered_json j;
  j["n"] = t.order();
  j["parent"] = t.parents(0);
  return j.dump();
}

LabelledTree tree_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  const auto parent = j.at("parent").get<std::vector<int>>();
  if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(parent.size())) {
    throw std::invalid_argument("tree JSON: n does not match the parent array");
  }
  return LabelledTree::from_parents(parent);
}

std::string prufer_to_json(std::span<const int> sequence) {
  return nlohmann::json(std::vector<int>(sequence.begin(), sequence.end())).dump();
}

std::vector<int> prufer_from_json(std::string_view text) { return nlohmann::json::parse(text).get<std::vector<int>>(); }

}  // namespace subtree
