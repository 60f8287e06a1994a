#include <gtest/gtest.h>

#include "support.hpp"

using namespace kim;
using kim::testing::error_of;

TEST(RamseyScale, Values) {
  EXPECT_EQ(ramsey_scale(1), 0);
  EXPECT_EQ(ramsey_scale(15), 1);
  EXPECT_EQ(ramsey_scale(16), 2);
  EXPECT_EQ(ramsey_scale(511), 2);
  EXPECT_EQ(ramsey_scale(512), 3);
  EXPECT_EQ(ramsey_guarantee(16), 2);
  EXPECT_EQ(ramsey_guarantee(512), 4);
  EXPECT_EQ(ramsey_guarantee(3), 1);
}

TEST(MonoSearch, AllRed) {
  const EdgeColoring c(16, Color::Red);
  const auto r = mono_kim_search(c);
  EXPECT_EQ(r.color, Color::Red);
  EXPECT_GE(r.witness.size(), 2);
  EXPECT_TRUE(verify_mono_witness(c, Color::Red, r.witness));
}

TEST(MonoSearch, AllBlue) {
  const EdgeColoring c(512, Color::Blue);
  const auto r = mono_kim_search(c);
  EXPECT_EQ(r.color, Color::Blue);
  EXPECT_GE(r.witness.size(), 4);
  EXPECT_TRUE(verify_mono_witness(c, Color::Blue, r.witness));
}

TEST(MonoSearch, RandomColouringOf512) {
  const auto c = random_coloring(512, 2024);
  const auto r = mono_kim_search(c);
  EXPECT_GE(r.witness.size(), 4);
  EXPECT_TRUE(verify_mono_witness(c, r.color, r.witness));
  EXPECT_TRUE(verify_witness(c.color_graph(r.color), r.witness));
}

TEST(MonoSearch, KeptIntervalsStayPairwiseBlue) {
  Xorshift64Star rng(101);
  int rounds = 0;
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 16 + static_cast<int>(rng.below(600));
    // A handful of red edges lets the search run several rounds.
    EdgeColoring c(n, Color::Blue);
    for (int e = static_cast<int>(rng.below(6)); e > 0; --e) {
      const int u = static_cast<int>(rng.below(n - 1));
      c.set(u, u + 1 + static_cast<int>(rng.below(n - 1 - u)), Color::Red);
    }
    std::vector<std::vector<Interval>> trace;
    const auto r = mono_kim_search(c, &trace);
    ASSERT_GE(r.witness.size(), ramsey_guarantee(n));
    ASSERT_EQ(static_cast<int>(trace.size()), r.rounds);
    for (std::size_t k = 0; k < trace.size(); ++k) {
      const auto& kept = trace[k];
      ASSERT_EQ(kept.size(), std::size_t{2} << k);
      for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j) {
          ASSERT_LT(kept[i].hi, kept[j].lo);
          for (int u = kept[i].lo; u <= kept[i].hi; ++u)
            for (int v = kept[j].lo; v <= kept[j].hi; ++v) ASSERT_EQ(c.color(u, v), Color::Blue);
        }
    }
    rounds += r.rounds;
  }
  EXPECT_GT(rounds, 0);
}

TEST(MonoSearch, MeetsGuaranteeOnRandomColourings) {
  Xorshift64Star rng(102);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 2 + static_cast<int>(rng.below(400));
    const auto c = random_coloring(n, rng);
    const auto r = mono_kim_search(c);
    ASSERT_GE(r.witness.size(), ramsey_guarantee(n));
    ASSERT_TRUE(verify_mono_witness(c, r.color, r.witness));
  }
}

TEST(MonoSearch, RejectsTinyInputs) {
  EXPECT_EQ(error_of([] { mono_kim_search(EdgeColoring(1)); }), ErrorCode::BadParams);
}

TEST(Substitution, ColourFollowsTopDifferingDigit) {
  for (auto [q, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {5, 2}}) {
    const auto s = gen_substitution_coloring(q, k, 7);
    int n = 1;
    for (int i = 0; i < k; ++i) n *= q;
    ASSERT_EQ(s.coloring.n(), n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        int scale = n / q, du = 0, dv = 0;
        while ((du = u / scale % q) == (dv = v / scale % q)) scale /= q;
        ASSERT_EQ(s.coloring.color(u, v), s.base.color(du, dv));
      }
  }
}

TEST(Substitution, SixteenVerticesStayBelowFull) {
  const auto s = gen_substitution_coloring(4, 2, 3);
  EXPECT_TRUE(s.verified);
  const auto best = exact_max_mono_kim(s.coloring);
  EXPECT_LE(best.size, 16);
  EXPECT_LT(best.size, 16);
}

TEST(Substitution, ThresholdAboveQIsVacuous) {
  EXPECT_EQ(base_threshold(3), 5);
  const auto s = gen_substitution_coloring(3, 2, 1);
  EXPECT_TRUE(s.verified);
  EXPECT_EQ(s.coloring.n(), 9);
}

TEST(Substitution, BaseAvoidsLargeMonochromaticCliques) {
  const auto s = gen_substitution_coloring(16, 1, 5);
  ASSERT_TRUE(s.verified);
  for (Color col : {Color::Red, Color::Blue})
    EXPECT_LT(exact_max_clique(Graph::from_sorted_edges(16, s.base.color_graph(col).edges())), s.threshold);
}

TEST(Substitution, DeterministicAndGuarded) {
  EXPECT_EQ(gen_substitution_coloring(4, 3, 9).coloring, gen_substitution_coloring(4, 3, 9).coloring);
  EXPECT_EQ(error_of([] { gen_substitution_coloring(1, 2, 0); }), ErrorCode::BadParams);
  EXPECT_EQ(error_of([] { gen_substitution_coloring(4, 0, 0); }), ErrorCode::BadParams);
  EXPECT_EQ(error_of([] { gen_substitution_coloring(2, 13, 0); }), ErrorCode::TooLarge);
}
