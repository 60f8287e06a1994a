#include <gtest/gtest.h>

#include "support.hpp"

using namespace kim;
using kim::testing::error_of;

namespace {

/// First layer-1 member of class `cls` with an edge, over seeded random graphs.
struct Found {
  OrderedGraph parent;
  TracedGraph child;
};

std::optional<Found> find_child(EdgeClass cls, std::uint64_t seed, int tries = 3000) {
  Xorshift64Star rng(seed);
  for (int rep = 0; rep < tries; ++rep) {
    const auto g = kim::testing::random_graph(5 + static_cast<int>(rng.below(20)), rng);
    TracedGraph root;
    root.graph = g;
    for (auto& h : refined_quotients(root))
      if (h.provenance->edge_class == cls && h.graph.m() > 0) return Found{g, std::move(h)};
  }
  return std::nullopt;
}

/// Some left-lazy looped K_2 of h: the second part holds an edge and meets
/// the first part.
std::optional<IntervalWitness> left_lazy_pair(const OrderedGraph& h) {
  for (int cut = 0; cut + 1 < h.n(); ++cut) {
    auto w = IntervalWitness::with_variant({{0, cut}, {cut + 1, h.n() - 1}}, Variant::LeftLazy);
    if (verify_witness(h, w)) return w;
  }
  return std::nullopt;
}

/// A seeded random graph whose layer 4 is nonempty.
OrderedGraph rank_four_graph() {
  Xorshift64Star rng(71);
  for (;;) {
    const int n = 18 + static_cast<int>(rng.below(20));
    const auto g = random_gnm(n, static_cast<long long>(n) * (n - 1) / 4, rng);
    if (!g_layers(g, 4)[4].empty()) return g;
  }
}

}  // namespace

TEST(HeavyLeaf, CliqueOnFive) {
  const auto t = labeled_decomposition(ordered_clique(5));
  const auto hl = heavy_leaf(t, 4);
  ASSERT_TRUE(hl.has_value());
  EXPECT_EQ(t.vertex_of(hl->leaf), 4);
  EXPECT_EQ(hl->ancestors.size(), 4u);
  for (int x : hl->ancestors) EXPECT_TRUE(t.lca().is_ancestor(x, hl->leaf));
}

TEST(HeavyLeaf, EdgelessQuotientsHaveNone) {
  EXPECT_FALSE(heavy_leaf(labeled_decomposition(edgeless(6)), 1).has_value());
}

TEST(HeavyLeaf, PathOnThree) {
  const auto t = labeled_decomposition(ordered_path(3));
  const auto hl = heavy_leaf(t, 1);
  ASSERT_TRUE(hl.has_value());
  EXPECT_EQ(t.vertex_of(hl->leaf), 1);
  ASSERT_EQ(hl->ancestors.size(), 1u);
  EXPECT_EQ(t.span(hl->ancestors[0]), (Interval{1, 1}));
}

TEST(ExtractClique, CliqueOnFiveTriangle) {
  const auto t = labeled_decomposition(ordered_clique(5));
  const auto hl = heavy_leaf(t, 3);
  ASSERT_TRUE(hl.has_value());
  const auto clique = extract_clique_from_heavy_leaf(t, hl->ancestors, 3);
  ASSERT_EQ(clique.size(), 3u);
  const auto g = ordered_clique(5);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) EXPECT_TRUE(g.has_edge(clique[i], clique[j]));
}

TEST(ExtractClique, SingleVertex) {
  const auto t = labeled_decomposition(ordered_path(4));
  const auto hl = heavy_leaf(t, 1);
  ASSERT_TRUE(hl.has_value());
  const auto one = extract_clique_from_heavy_leaf(t, {hl->ancestors[0]}, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], t.span(hl->ancestors[0]).lo);
}

TEST(ExtractClique, FabricatedChainIsCaught) {
  const auto t = labeled_decomposition(ordered_path(3));
  int mid = -1;
  for (int x = 0; x < t.size(); ++x)
    if (t.span(x) == Interval{1, 1} && !t.is_leaf(x)) mid = x;
  ASSERT_GE(mid, 0);
  const std::vector<int> chain{mid, t.leaf_of(1), t.leaf_of(2)};
  EXPECT_EQ(error_of([&] { extract_clique_from_heavy_leaf(t, chain, 3); }), ErrorCode::NotAClique);
  EXPECT_EQ(error_of([&] { extract_clique_from_heavy_leaf(t, {mid}, 3); }), ErrorCode::BadParams);
}

TEST(ExtractClique, HeavyLeavesGiveCliquesOnRandomGraphs) {
  Xorshift64Star rng(41);
  int found = 0;
  for (int rep = 0; rep < 400; ++rep) {
    const auto g = kim::testing::random_graph(4 + static_cast<int>(rng.below(25)), rng);
    const auto t = labeled_decomposition(g);
    for (int k = 2; k <= 5; ++k) {
      const auto hl = heavy_leaf(t, 2 * k - 3);
      if (!hl) break;
      const auto clique = extract_clique_from_heavy_leaf(t, hl->ancestors, k, hl->leaf);
      ASSERT_EQ(static_cast<int>(clique.size()), k);
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) ASSERT_TRUE(g.has_edge(std::min(clique[i], clique[j]), std::max(clique[i], clique[j])));
      ASSERT_TRUE(verify_witness(g, witness_from_clique(g.n(), clique)));
      ++found;
    }
  }
  EXPECT_GT(found, 100);
}

TEST(LiftWitness, MonotoneClassKeepsVariant) {
  const auto layers = g_layers(ordered_path(3), 1);
  for (const auto& h : layers[1]) {
    ASSERT_EQ(h.provenance->edge_class, EdgeClass::Monotone);
    const auto seed = IntervalWitness::with_variant({{0, h.graph.n() - 1}}, Variant::Looped);
    const auto up = lift_witness_one_level(h, layers[0][0].graph, seed);
    EXPECT_EQ(up.variant, Variant::Looped);
    EXPECT_EQ(up.size(), 1);
    EXPECT_TRUE(verify_witness(ordered_path(3), up));
  }
}

TEST(LiftWitness, LoopedSingleInRightRightClassBecomesRightLazyPair) {
  const auto f = find_child(EdgeClass::RR, 51);
  ASSERT_TRUE(f.has_value());
  const auto seed = IntervalWitness::with_variant({{0, f->child.graph.n() - 1}}, Variant::Looped);
  const auto up = lift_witness_one_level(f->child, f->parent, seed);
  EXPECT_EQ(up.variant, Variant::RightLazy);
  EXPECT_EQ(up.size(), 2);
  EXPECT_TRUE(verify_witness(f->parent, up));
}

TEST(LiftWitness, LeftLazyInRightRightClassBecomesLazy) {
  Xorshift64Star rng(52);
  int lifted = 0;
  for (int attempt = 0; attempt < 40 && lifted < 5; ++attempt) {
    const auto f = find_child(EdgeClass::RR, rng.next(), 500);
    if (!f) continue;
    const auto w = left_lazy_pair(f->child.graph);
    if (!w) continue;
    const auto up = lift_witness_one_level(f->child, f->parent, *w);
    EXPECT_EQ(up.variant, Variant::Lazy);
    EXPECT_EQ(up.size(), 3);
    EXPECT_TRUE(verify_witness(f->parent, up));
    ++lifted;
  }
  EXPECT_GT(lifted, 0);
}

TEST(LiftWitness, EveryClassLiftsLoopedSeeds) {
  Xorshift64Star rng(53);
  std::map<EdgeClass, int> seen;
  for (int rep = 0; rep < 300; ++rep) {
    const auto g = kim::testing::random_graph(6 + static_cast<int>(rng.below(30)), rng);
    const auto layers = g_layers(g, 3);
    for (int r = 1; r < static_cast<int>(layers.size()); ++r)
      for (const auto& h : layers[r]) {
        if (h.graph.m() == 0) continue;
        const auto& parent = layers[r - 1][h.provenance->parent_index].graph;
        const auto seed = IntervalWitness::with_variant({{0, h.graph.n() - 1}}, Variant::Looped);
        ASSERT_NO_THROW(lift_witness_one_level(h, parent, seed));
        ++seen[h.provenance->edge_class];
      }
  }
  for (EdgeClass c : {EdgeClass::Monotone, EdgeClass::RR, EdgeClass::RL, EdgeClass::LR, EdgeClass::LL})
    EXPECT_GT(seen[c], 0) << to_string(c);
}

TEST(LiftWitness, RejectsBadInput) {
  const auto layers = g_layers(ordered_path(3), 1);
  const auto& h = layers[1][0];
  EXPECT_EQ(error_of([&] { lift_witness_one_level(layers[0][0], ordered_path(3), IntervalWitness::plain({{0, 2}})); }),
            ErrorCode::LiftFailed);
  EXPECT_EQ(error_of([&] { lift_witness_one_level(h, ordered_path(4), IntervalWitness::plain({{0, h.graph.n() - 1}})); }),
            ErrorCode::LiftFailed);
}

TEST(RankChain, SinglePartFromFirstLayer) {
  const auto layers = g_layers(ordered_path(3), 1);
  ASSERT_FALSE(layers[1].empty());
  const auto w = extract_witness_from_rank_chain(layers, 1, 0, 1);
  EXPECT_EQ(w.size(), 1);
  EXPECT_TRUE(verify_witness(ordered_path(3), w));
}

TEST(RankChain, FourLayersGiveAnEdgeWitness) {
  const auto g = rank_four_graph();
  const auto layers = g_layers(g, 4);
  ASSERT_FALSE(layers[4].empty());
  for (int i = 0; i < static_cast<int>(layers[4].size()); ++i) {
    std::vector<IntervalWitness> trace;
    const auto w = extract_witness_from_rank_chain(layers, 4, i, 2, &trace);
    ASSERT_EQ(w.size(), 2);
    ASSERT_TRUE(verify_witness(g, w));
    ASSERT_FALSE(trace.empty());
  }
}

TEST(Detect, CliqueOnFourFindsTriangle) {
  const auto r = detect_kt(ordered_clique(4), 3);
  ASSERT_TRUE(r.yes);
  EXPECT_EQ(r.path, YesPath::HeavyLeaf);
  ASSERT_EQ(r.witness->size(), 3);
  EXPECT_TRUE(verify_witness(ordered_clique(4), *r.witness));
}

TEST(Detect, Negatives) {
  EXPECT_FALSE(detect_kt(monotone_biclique(2), 4).yes);
  EXPECT_FALSE(detect_kt(edgeless(5), 2).yes);
  EXPECT_EQ(error_of([] { detect_kt(edgeless(5), 0); }), ErrorCode::BadParams);
}

TEST(Detect, TrivialSizes) {
  const auto one = detect_kt(edgeless(3), 1);
  ASSERT_TRUE(one.yes);
  EXPECT_EQ(one.witness->size(), 1);
  EXPECT_TRUE(detect_kt(ordered_path(2), 2).yes);
  EXPECT_DOUBLE_EQ(detect_kt(ordered_path(2), 1).loglog_factor, 13.0);
}

TEST(Detect, YesAnswersAreSoundAgainstOracle) {
  Xorshift64Star rng(61);
  int yes = 0;
  for (int rep = 0; rep < 600; ++rep) {
    const auto g = kim::testing::random_graph(2 + static_cast<int>(rng.below(10)), rng);
    const int t = 1 + static_cast<int>(rng.below(4));
    const auto r = detect_kt(g, t);
    if (!r.yes) continue;
    ++yes;
    ASSERT_EQ(r.witness->size(), t);
    ASSERT_TRUE(verify_witness(g, *r.witness));
    ASSERT_TRUE(exact_has_complete_kim(g, t).yes);
  }
  EXPECT_GT(yes, 100);
}

TEST(Detect, RankPathWhenLayerFourIsNonempty) {
  const auto g = rank_four_graph();
  const auto r = detect_kt(g, 2);
  ASSERT_TRUE(r.yes);
  EXPECT_EQ(r.path, YesPath::Rank);
  EXPECT_TRUE(verify_witness(g, *r.witness));
}

TEST(Detect, ThreadCountDoesNotChangeAnswers) {
  Xorshift64Star rng(62);
  for (int rep = 0; rep < 30; ++rep) {
    const auto g = kim::testing::random_graph(20 + static_cast<int>(rng.below(60)), rng);
    LayerOptions par;
    par.threads = 3;
    const auto a = detect_kt(g, 3);
    const auto b = detect_kt(g, 3, par);
    ASSERT_EQ(a.yes, b.yes);
    if (a.yes) ASSERT_EQ(*a.witness, *b.witness);
    ASSERT_EQ(a.layer_sizes, b.layer_sizes);
  }
}
