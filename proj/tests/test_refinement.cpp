#include <gtest/gtest.h>

#include "support.hpp"

using namespace kim;

namespace {

TracedGraph traced(const OrderedGraph& g) {
  TracedGraph h;
  h.graph = g;
  return h;
}

int node_with_span(const DelayedTree& t, Interval s, int min_depth) {
  for (int x = 0; x < t.size(); ++x)
    if (t.span(x) == s && t.depth(x) >= min_depth && !t.is_leaf(x)) return x;
  return -1;
}

bool anchor_type(Label l, bool want_r) {
  return want_r ? (l == Label::R || l == Label::OR) : (l == Label::L || l == Label::OL);
}

}  // namespace

TEST(Labels, PathOnThree) {
  const auto t = labeled_decomposition(ordered_path(3));
  const int root = t.root();
  EXPECT_EQ(t.label(root), Label::None);
  for (int y : t.children(root)) EXPECT_EQ(t.label(y), Label::None);
  const int mid = node_with_span(t, {1, 1}, 2);
  const int last = node_with_span(t, {2, 2}, 2);
  ASSERT_GE(mid, 0);
  ASSERT_GE(last, 0);
  EXPECT_EQ(t.label(mid), Label::L);
  EXPECT_EQ(t.label(last), Label::O);
}

TEST(Labels, CliqueOnFour) {
  const auto t = labeled_decomposition(ordered_clique(4));
  const int block = node_with_span(t, {2, 3}, 1);
  ASSERT_GE(block, 0);
  EXPECT_EQ(t.label(block), Label::L);
  EXPECT_EQ(t.type(t.children(block)[0]), Label::L);
}

TEST(Labels, RefinedOFollowsItsPredecessor) {
  Xorshift64Star rng(12);
  int refined = 0;
  for (int rep = 0; rep < 400; ++rep) {
    const auto t = labeled_decomposition(kim::testing::random_graph(3 + static_cast<int>(rng.below(20)), rng));
    for (int x = 0; x < t.size(); ++x) {
      const auto kids = t.children(x);
      for (std::size_t i = 0; i < kids.size(); ++i) {
        const Label l = t.label(kids[i]);
        if (l != Label::OR && l != Label::OL) continue;
        ++refined;
        ASSERT_GE(kids.size(), 3u);
        ASSERT_GT(i, 0u);
        ASSERT_EQ(t.label(kids[i - 1]), l == Label::OR ? Label::R : Label::L);
      }
    }
  }
  EXPECT_GT(refined, 0);
}

TEST(RefinedQuotients, MonotoneBicliqueHasNone) {
  EXPECT_TRUE(refined_quotients(traced(monotone_biclique(3))).empty());
}

TEST(RefinedQuotients, PathOnThree) {
  const auto q = refined_quotients(traced(ordered_path(3)));
  ASSERT_EQ(q.size(), 2u);
  for (const auto& h : q) {
    EXPECT_TRUE(is_monotone_bipartite(h.graph));
    ASSERT_TRUE(h.provenance.has_value());
    EXPECT_EQ(h.provenance->edge_class, EdgeClass::Monotone);
    EXPECT_EQ(h.layer, 1);
  }
}

TEST(RefinedQuotients, CliqueOnFourIsAllMonotone) {
  // One quotient per internal node with grandchildren; all are left stars.
  const auto q = refined_quotients(traced(ordered_clique(4)));
  EXPECT_EQ(q.size(), 3u);
  for (const auto& h : q) {
    EXPECT_TRUE(is_monotone_bipartite(h.graph));
    EXPECT_EQ(h.provenance->edge_class, EdgeClass::Monotone);
  }
}

TEST(RefinedQuotients, SplitClassesAreAnchoredByType) {
  Xorshift64Star rng(13);
  int split = 0;
  for (int rep = 0; rep < 400; ++rep) {
    const auto g = kim::testing::random_graph(4 + static_cast<int>(rng.below(25)), rng);
    for (const auto& h : refined_quotients(traced(g))) {
      const auto& p = *h.provenance;
      ASSERT_EQ(static_cast<int>(p.origin.size()), h.graph.n());
      ASSERT_EQ(p.parent_n, g.n());
      for (int v = 0; v + 1 < h.graph.n(); ++v) ASSERT_LT(p.origin[v].leaves.hi, p.origin[v + 1].leaves.lo);
      if (p.edge_class == EdgeClass::Monotone || h.graph.n() == 0) continue;
      ++split;
      const bool right = extends_right(p.edge_class);
      ASSERT_TRUE(anchor_type(p.origin.front().type, right)) << to_string(p.edge_class);
      ASSERT_TRUE(anchor_type(p.origin.back().type, right)) << to_string(p.edge_class);
    }
  }
  EXPECT_GT(split, 0);
}

TEST(Layers, Examples) {
  const auto k22 = g_layers(monotone_biclique(2), 2);
  ASSERT_EQ(k22.size(), 3u);
  EXPECT_EQ(k22[0].size(), 1u);
  EXPECT_TRUE(k22[1].empty());
  EXPECT_TRUE(k22[2].empty());

  const auto p3 = g_layers(ordered_path(3), 3);
  EXPECT_EQ(p3[1].size(), 2u);
  for (const auto& h : p3[1]) EXPECT_TRUE(is_monotone_bipartite(h.graph));
  EXPECT_TRUE(p3[2].empty());

  const auto k4 = g_layers(ordered_clique(4), 2);
  EXPECT_FALSE(k4[1].empty());
  EXPECT_TRUE(k4[2].empty());

  EXPECT_EQ(kim::testing::error_of([] { g_layers(ordered_path(3), -1); }), ErrorCode::BadParams);
}

TEST(Layers, MembersAreOrderedSubgraphsExhaustiveToFive) {
  for (int n = 1; n <= 5; ++n)
    kim::testing::for_each_graph(n, [](const OrderedGraph& g) {
      const auto layers = g_layers(g, 4);
      for (int r = 0; r < static_cast<int>(layers.size()); ++r)
        for (int i = 0; i < static_cast<int>(layers[r].size()); ++i)
          ASSERT_TRUE(kim::testing::is_ordered_subgraph(g, layers[r][i].graph, map_to_root(layers, r, i)));
    });
}

TEST(Layers, SizeBoundsAndSubgraphsOnRandomGraphs) {
  Xorshift64Star rng(14);
  for (int rep = 0; rep < 150; ++rep) {
    const auto g = kim::testing::random_graph(2 + static_cast<int>(rng.below(40)), rng);
    const auto layers = g_layers(g, 6);
    const long long m = g.m(), n = g.n();
    for (int r = 1; r < static_cast<int>(layers.size()); ++r) {
      long long edges = 0;
      for (int i = 0; i < static_cast<int>(layers[r].size()); ++i) {
        edges += layers[r][i].graph.m();
        ASSERT_TRUE(kim::testing::is_ordered_subgraph(g, layers[r][i].graph, map_to_root(layers, r, i)));
      }
      ASSERT_LE(edges, m);
      ASSERT_LE(static_cast<long long>(layers[r].size()), 4 * m * n);
    }
  }
}

TEST(Layers, ThreadedExpansionMatchesSerial) {
  Xorshift64Star rng(15);
  for (int rep = 0; rep < 20; ++rep) {
    const auto g = kim::testing::random_graph(30 + static_cast<int>(rng.below(60)), rng);
    LayerOptions par;
    par.threads = 4;
    const auto a = g_layers(g, 5);
    const auto b = g_layers(g, 5, par);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
      ASSERT_EQ(a[r].size(), b[r].size());
      for (std::size_t i = 0; i < a[r].size(); ++i) ASSERT_EQ(a[r][i].graph.edges(), b[r][i].graph.edges());
    }
  }
}

TEST(DelayedRank, Examples) {
  for (int t = 1; t <= 4; ++t) EXPECT_EQ(delayed_rank(monotone_biclique(t), 5).rank, 0);
  EXPECT_EQ(delayed_rank(ordered_path(3), 5).rank, 1);
  for (int n = 3; n <= 9; ++n) {
    const auto r = delayed_rank(ordered_clique(n), 5);
    EXPECT_EQ(r.rank, 1) << "n=" << n;
    EXPECT_TRUE(r.exact);
  }
  EXPECT_LE(delayed_rank(ordered_path(6), 8).rank, 4);
}

TEST(DelayedRank, CapIsReportedAsLowerBound) {
  const auto r = delayed_rank(ordered_path(3), 0);
  EXPECT_EQ(r.rank, 0);
  EXPECT_FALSE(r.exact);
  EXPECT_EQ(kim::testing::error_of([] { delayed_rank(ordered_path(3), -1); }), ErrorCode::BadParams);
}
