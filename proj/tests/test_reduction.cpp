#include <gtest/gtest.h>

#include "support.hpp"

using namespace kim;
using kim::testing::error_of;

namespace {

Graph path3() { return Graph::from_edge_list(3, {{0, 1}, {1, 2}}); }
Graph triangle() { return Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST(BuildHat, PathOnThree) {
  const auto hat = build_hat(path3(), 2);
  EXPECT_EQ(hat.t, 4);
  ASSERT_EQ(hat.graph.n(), 5);
  // Odd positions are universal; even positions carry the original edges.
  for (int u : {1, 3})
    for (int x = 0; x < 5; ++x)
      if (x != u) EXPECT_TRUE(hat.graph.has_edge(std::min(u, x), std::max(u, x)));
  EXPECT_TRUE(hat.graph.has_edge(0, 2));
  EXPECT_TRUE(hat.graph.has_edge(2, 4));
  EXPECT_FALSE(hat.graph.has_edge(0, 4));
}

TEST(BuildHat, SmallCases) {
  const auto one = build_hat(Graph::from_sorted_edges(1, {}), 1);
  EXPECT_EQ(one.t, 1);
  EXPECT_EQ(one.graph.n(), 1);
  const auto tri = build_hat(triangle(), 3);
  EXPECT_EQ(tri.t, 5);
  EXPECT_EQ(tri.graph.m(), 10);
  EXPECT_TRUE(exact_has_complete_kim(tri.graph, tri.t).yes);
  EXPECT_EQ(error_of([] { build_hat(path3(), 0); }), ErrorCode::BadK);
  EXPECT_EQ(error_of([] { build_hat(path3(), 4); }), ErrorCode::BadK);
}

TEST(DecodeWitness, PathOnThree) {
  const auto g = path3();
  const auto hat = build_hat(g, 2);
  const auto r = exact_has_complete_kim(hat.graph, hat.t);
  ASSERT_TRUE(r.yes);
  const auto clique = decode_witness(g, 2, *r.witness);
  ASSERT_EQ(clique.size(), 2u);
  EXPECT_TRUE(g.has_edge(clique[0], clique[1]));
}

TEST(DecodeWitness, Triangle) {
  const auto g = triangle();
  const auto hat = build_hat(g, 3);
  const auto r = exact_has_complete_kim(hat.graph, hat.t);
  ASSERT_TRUE(r.yes);
  EXPECT_EQ(decode_witness(g, 3, *r.witness), (std::vector<int>{0, 1, 2}));
}

TEST(DecodeWitness, SingleVertex) {
  const auto g = Graph::from_sorted_edges(3, {});
  const auto hat = build_hat(g, 1);
  const auto r = exact_has_complete_kim(hat.graph, hat.t);
  ASSERT_TRUE(r.yes);
  EXPECT_EQ(decode_witness(g, 1, *r.witness).size(), 1u);
}

TEST(DecodeWitness, RejectsNonWitnesses) {
  const auto g = path3();
  EXPECT_EQ(error_of([&] { decode_witness(g, 2, IntervalWitness::plain({{0, 4}})); }),
            ErrorCode::PreconditionViolated);
}

TEST(Reduction, CliqueIffMinorOnSmallGraphs) {
  for (int n = 1; n <= 5; ++n)
    kim::testing::for_each_graph<Graph>(n, [n](const Graph& g) {
      for (int k = 1; k <= n; ++k) {
        const auto hat = build_hat(g, k);
        const auto r = exact_has_complete_kim(hat.graph, hat.t);
        ASSERT_EQ(r.yes, exact_max_clique(g) >= k);
        if (r.yes) {
          const auto clique = decode_witness(g, k, *r.witness);
          ASSERT_EQ(static_cast<int>(clique.size()), k);
        }
      }
    });
}
