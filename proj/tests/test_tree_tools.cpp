#include <gtest/gtest.h>

#include <map>
#include <set>

#include "subtree/exact_count.hpp"
#include "subtree/random_models.hpp"
#include "subtree/tree_tools.hpp"

using namespace subtree;

namespace {

LabelledTree tree_of(const Graph& g) { return LabelledTree::from_edges(g.order(), g.edges()); }

std::vector<mpz_class> z(std::initializer_list<long> xs) {
  std::vector<mpz_class> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

mpz_class pow_ui(unsigned long b, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

// Calls f on every word of length len over 0..n-1.
template <class F>
void for_each_word(int n, int len, F&& f) {
  std::vector<int> w(static_cast<std::size_t>(len), 0);
  while (true) {
    f(w);
    int i = len - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == n - 1) w[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return;
    ++w[static_cast<std::size_t>(i)];
  }
}

}  // namespace

TEST(LabelledTreeTest, Validation) {
  EXPECT_THROW(LabelledTree::from_edges(3, std::vector<Edge>{{0, 1}}), std::invalid_argument);
  EXPECT_THROW(LabelledTree::from_edges(3, std::vector<Edge>{{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(LabelledTree::from_parents(std::vector<int>{-1, -1}), std::invalid_argument);
  EXPECT_THROW(LabelledTree::from_parents(std::vector<int>{-1, 2, 1}), std::invalid_argument);
  const auto t = LabelledTree::from_parents(std::vector<int>{-1, 0, 1, 1});
  EXPECT_EQ(t.parents(0), (std::vector<int>{-1, 0, 1, 1}));
  EXPECT_EQ(t.parents(3), (std::vector<int>{1, 3, 1, -1}));
}

TEST(LabelledTreeTest, JsonRoundTrip) {
  const auto t = prufer_decode(std::vector<int>{3, 3, 1}, 5);
  const std::string text = to_json(t);
  EXPECT_EQ(text.rfind("{\"n\":5,\"parent\":[-1", 0), 0U);
  EXPECT_EQ(tree_from_json(text), t);
  EXPECT_EQ(prufer_from_json(prufer_to_json(std::vector<int>{3, 3, 1})), (std::vector<int>{3, 3, 1}));
  EXPECT_THROW(tree_from_json("{\"n\":3,\"parent\":[-1,0]}"), std::invalid_argument);
}

TEST(TreeSubtreePolynomial, Examples) {
  EXPECT_EQ(tree_subtree_polynomial(tree_of(path_graph(4))), Census(z({4, 3, 2, 1})));
  EXPECT_EQ(tree_subtree_polynomial(tree_of(star_graph(4))), Census(z({4, 3, 3, 1})));
  EXPECT_EQ(tree_subtree_polynomial(tree_of(path_graph(2))), Census(z({2, 1})));
  EXPECT_EQ(tree_subtree_polynomial(tree_of(path_graph(1))), Census(z({1})));
}

TEST(TreeSubtreePolynomial, MatchesBruteForce) {
  for (std::uint64_t i = 0; i < 500; ++i) {
    const int n = 2 + static_cast<int>(i % 9);
    const auto t = sample_uniform_labelled_tree(n, trial_seed(Seed{61}, i));
    EXPECT_EQ(tree_subtree_polynomial(t), brute_force_census(t.graph()));
  }
}

TEST(LeafCount, Examples) {
  EXPECT_EQ(leaf_count(tree_of(path_graph(5))), 2);
  EXPECT_EQ(leaf_count(tree_of(star_graph(6))), 5);
  EXPECT_EQ(leaf_count(tree_of(path_graph(1))), 0);
}

TEST(LeafSandwich, Examples) {
  const auto a = leaf_sandwich_check(tree_of(path_graph(4)), 1);
  EXPECT_EQ(a.lower, 2);
  EXPECT_EQ(a.value, 2);
  EXPECT_EQ(a.upper, 2);
  EXPECT_TRUE(a.pass);
  const auto b = leaf_sandwich_check(tree_of(star_graph(4)), 2);
  EXPECT_EQ(b.lower, 3);
  EXPECT_EQ(b.value, 3);
  EXPECT_EQ(b.upper, 6);
  EXPECT_TRUE(b.pass);
  const auto c = leaf_sandwich_check(tree_of(path_graph(7)), 0);
  EXPECT_EQ(c.lower, 1);
  EXPECT_EQ(c.value, 1);
  EXPECT_EQ(c.upper, 1);
  EXPECT_THROW(leaf_sandwich_check(tree_of(path_graph(4)), 4), std::invalid_argument);
}

TEST(LeafSandwich, RandomTrees) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(i % 63);
    const auto t = sample_uniform_labelled_tree(n, trial_seed(Seed{62}, i));
    const Census c = tree_subtree_polynomial(t);
    for (int k = 0; k < n; ++k) EXPECT_TRUE(leaf_sandwich_check(t, c, k).pass) << "n=" << n << " k=" << k;
  }
}

TEST(Prufer, Examples) {
  const auto edge = prufer_decode(std::vector<int>{}, 2);
  EXPECT_EQ(edge.edges(), (std::vector<Edge>{{0, 1}}));
  const auto star = prufer_decode(std::vector<int>{0, 0}, 4);
  EXPECT_EQ(star.degree(0), 3);
  EXPECT_THROW(prufer_decode(std::vector<int>{0}, 4), std::invalid_argument);
  EXPECT_THROW(prufer_decode(std::vector<int>{0, 4}, 4), std::invalid_argument);
  EXPECT_THROW(prufer_encode(tree_of(path_graph(1))), std::invalid_argument);
}

TEST(Prufer, RoundTrips) {
  Rng rng(Seed{63});
  for (int i = 0; i < 100; ++i) {
    std::vector<int> s(6);
    for (auto& x : s) x = static_cast<int>(rng.below(8));
    EXPECT_EQ(prufer_encode(prufer_decode(s, 8)), s);
  }
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto t = sample_uniform_labelled_tree(2 + static_cast<int>(i % 30), trial_seed(Seed{64}, i));
    EXPECT_EQ(prufer_decode(prufer_encode(t), t.order()), t);
  }
}

TEST(Prufer, LeavesAreMissingSymbols) {
  for (int n = 2; n <= 7; ++n) {
    for_each_word(n, n - 2, [&](const std::vector<int>& w) {
      const std::set<int> image(w.begin(), w.end());
      EXPECT_EQ(leaf_count(prufer_decode(w, n)), n - static_cast<int>(image.size()));
    });
  }
}

TEST(Surjections, Examples) {
  EXPECT_EQ(surjection_count(3, 2), 6);
  EXPECT_EQ(surjection_count(2, 2), 2);
  EXPECT_EQ(surjection_count(4, 1), 1);
  EXPECT_EQ(surjection_count(2, 3), 0);
  EXPECT_EQ(surjection_count(0, 0), 1);
  EXPECT_EQ(surjection_count(5, 5), 120);
}

TEST(TreesWithLeafCount, Examples) {
  EXPECT_EQ(trees_with_leaf_count(4, 2), 12);
  EXPECT_EQ(trees_with_leaf_count(4, 3), 4);
  EXPECT_EQ(trees_with_leaf_count(4, 4), 0);
  EXPECT_THROW(trees_with_leaf_count(1, 0), std::invalid_argument);
}

TEST(TreesWithLeafCount, SumsToCayley) {
  for (int n = 2; n <= 12; ++n) {
    mpz_class total = 0;
    for (int l = 0; l <= n; ++l) total += trees_with_leaf_count(n, l);
    EXPECT_EQ(total, pow_ui(static_cast<unsigned long>(n), static_cast<unsigned long>(n - 2))) << n;
  }
}

TEST(LeafDeficientBound, Examples) {
  EXPECT_EQ(leaf_deficient_tree_bound(4, 0.6), 12);
  EXPECT_EQ(leaf_deficient_tree_bound(5, 0.4), 0);
  EXPECT_EQ(leaf_deficient_tree_bound(7, 1.5), pow_ui(7, 5));
  // Strict inequality: l < 0.5 * 4 excludes l = 2.
  EXPECT_EQ(leaf_deficient_tree_bound(4, 0.5), 0);
  EXPECT_THROW(leaf_deficient_tree_bound(4, 0.0), std::invalid_argument);
}

TEST(LinearExtensions, Examples) {
  EXPECT_EQ(forest_linear_extensions(RootedForest({-1, 0, 1})), 1);
  EXPECT_EQ(forest_linear_extensions(RootedForest({-1, 0, 0, 0})), 6);
  EXPECT_EQ(forest_linear_extensions(RootedForest({-1, -1})), 2);
  EXPECT_EQ(linear_extensions_oracle(RootedForest({-1, 0, 1})), 1);
  EXPECT_EQ(linear_extensions_oracle(RootedForest({-1, 0, 0, 0})), 6);
  EXPECT_EQ(linear_extensions_oracle(RootedForest(std::vector<int>{})), 1);
  EXPECT_EQ(forest_linear_extensions(RootedForest(std::vector<int>{})), 1);
  EXPECT_THROW(RootedForest({1, 0}), std::invalid_argument);
  EXPECT_THROW(RootedForest({-1, 5}), std::invalid_argument);
}

TEST(LinearExtensions, ExhaustiveSmallForests) {
  // Every parent array with parent(v) < v (or -1) on up to 6 nodes.
  for (int n = 0; n <= 6; ++n) {
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    auto rec = [&](auto&& self, int v) -> void {
      if (v == n) {
        const RootedForest f(parent);
        EXPECT_EQ(forest_linear_extensions(f), linear_extensions_oracle(f));
        return;
      }
      for (int p = -1; p < v; ++p) {
        parent[static_cast<std::size_t>(v)] = p;
        self(self, v + 1);
      }
    };
    rec(rec, 0);
  }
}
