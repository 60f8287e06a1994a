#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kim/coloring.hpp"
#include "kim/error.hpp"
#include "kim/graph.hpp"
#include "kim/witness.hpp"

namespace kim {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;
inline constexpr int kOracleMatrixLimit = 4096;
inline constexpr int kCliqueLimit = 20;

struct ExactResult {
  bool yes = false;
  std::optional<IntervalWitness> witness;
};

/// C(n, k), saturating at UINT64_MAX.
inline std::uint64_t binomial_saturating(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

namespace detail {

/// Edge counts between vertex ranges in O(1) via 2D prefix sums.
class BlockCounter {
 public:
  explicit BlockCounter(const OrderedGraph& g) : n_(g.n()), sum_((n_ + 1) * (n_ + 1), 0) {
    for (const auto& e : g.edges()) {
      ++at(e.u + 1, e.v + 1);
      ++at(e.v + 1, e.u + 1);
    }
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) at(i, j) += at(i - 1, j) + at(i, j - 1) - at(i - 1, j - 1);
  }

  bool joined(const Interval& a, const Interval& b) const {
    return sum(a.hi + 1, b.hi + 1) - sum(a.lo, b.hi + 1) - sum(a.hi + 1, b.lo) + sum(a.lo, b.lo) > 0;
  }

 private:
  int& at(int i, int j) { return sum_[static_cast<std::size_t>(i) * (n_ + 1) + j]; }
  int sum(int i, int j) const { return sum_[static_cast<std::size_t>(i) * (n_ + 1) + j]; }

  int n_;
  std::vector<int> sum_;
};

inline void guard_enumeration(int n, int parts, std::uint64_t budget) {
  const std::uint64_t count = binomial_saturating(n - 1, parts - 1);
  if (count > budget)
    throw Error(ErrorCode::TooLarge, "C(" + std::to_string(n - 1) + ", " + std::to_string(parts - 1) +
                                         ") placements exceed the budget of " + std::to_string(budget));
  if (n > kOracleMatrixLimit)
    throw Error(ErrorCode::TooLarge, "n = " + std::to_string(n) + " exceeds the oracle limit");
}

/// Depth-first search over boundary placements in lexicographic order.
/// `need(i, j)` says whether parts i < j must be joined. A branch is pruned
/// as soon as a fixed part misses a required edge to an earlier one.
template <class Need>
ExactResult enumerate_partitions(const OrderedGraph& g, int parts, Need need) {
  const int n = g.n();
  const BlockCounter blocks(g);
  std::vector<Interval> cur;
  auto fits = [&](const Interval& iv) {
    const int j = static_cast<int>(cur.size());
    for (int i = 0; i < j; ++i)
      if (need(i, j) && !blocks.joined(cur[i], iv)) return false;
    return true;
  };
  auto dfs = [&](auto&& self, int start) -> bool {
    const int j = static_cast<int>(cur.size());
    const int left = parts - j - 1;  // parts still to place after this one
    if (left == 0) {
      const Interval last{start, n - 1};
      if (!fits(last)) return false;
      cur.push_back(last);
      return true;
    }
    for (int end = start; end <= n - 1 - left; ++end) {
      const Interval iv{start, end};
      if (!fits(iv)) continue;
      cur.push_back(iv);
      if (self(self, end + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  ExactResult res;
  if (dfs(dfs, 0)) {
    res.yes = true;
    res.witness = IntervalWitness::plain(cur);
  }
  return res;
}

}  // namespace detail

/// Exact test for K_t as an interval minor; the lexicographically first
/// boundary placement is returned as witness. t > n answers false.
inline ExactResult exact_has_complete_kim(const OrderedGraph& g, int t,
                                          std::uint64_t budget = kDefaultOracleBudget) {
  if (t < 1) throw Error(ErrorCode::BadParams, "t must be at least 1");
  const int n = g.n();
  ExactResult res;
  if (t > n) return res;
  if (t == 1) {
    res.yes = true;
    res.witness = IntervalWitness::plain({{0, n - 1}});
    return res;
  }
  if (t == 2) {
    // The first cut crossed by an edge is after the smallest left endpoint.
    if (g.m() == 0) return res;
    int cut = n;
    for (const auto& e : g.edges()) cut = std::min(cut, e.u);
    res.yes = true;
    res.witness = IntervalWitness::from_cuts(n, {cut});
    return res;
  }
  detail::guard_enumeration(n, t, budget);
  return detail::enumerate_partitions(g, t, [](int, int) { return true; });
}

/// Largest t with a K_t interval minor. Stops at the first failure, which is
/// sound because merging two adjacent parts of a K_t witness gives K_{t-1}.
inline int exact_max_kim(const OrderedGraph& g, std::uint64_t budget = kDefaultOracleBudget) {
  int best = 0;
  for (int t = 1; t <= g.n(); ++t) {
    if (!exact_has_complete_kim(g, t, budget).yes) break;
    best = t;
  }
  return best;
}

/// Same as exact_max_kim, also returning the witness of the maximum.
inline ExactResult exact_max_kim_witness(const OrderedGraph& g, int* size,
                                         std::uint64_t budget = kDefaultOracleBudget) {
  ExactResult best;
  *size = 0;
  for (int t = 1; t <= g.n(); ++t) {
    auto r = exact_has_complete_kim(g, t, budget);
    if (!r.yes) break;
    best = std::move(r);
    *size = t;
  }
  return best;
}

/// Exact test for the ordered graph h as an interval minor of g: parts are
/// matched to h's vertices in order and every h-edge needs a g-edge.
inline ExactResult exact_has_interval_minor(const OrderedGraph& g, const OrderedGraph& h,
                                            std::uint64_t budget = kDefaultOracleBudget) {
  if (h.n() < 1) throw Error(ErrorCode::BadParams, "pattern graph must have a vertex");
  ExactResult res;
  if (h.n() > g.n()) return res;
  detail::guard_enumeration(g.n(), h.n(), budget);
  return detail::enumerate_partitions(g, h.n(), [&](int i, int j) { return h.has_edge(i, j); });
}

struct MonoKim {
  int size = 0;
  Color color = Color::Red;
  std::optional<IntervalWitness> witness;
};

/// Largest complete interval minor over both colour classes; red wins ties.
inline MonoKim exact_max_mono_kim(const EdgeColoring& c, std::uint64_t budget = kDefaultOracleBudget) {
  MonoKim out;
  for (Color col : {Color::Red, Color::Blue}) {
    int size = 0;
    auto r = exact_max_kim_witness(c.color_graph(col), &size, budget);
    if (size > out.size) out = {size, col, std::move(r.witness)};
  }
  return out;
}

/// Maximum clique by bitmask branch and bound; n <= 20.
inline int exact_max_clique(const Graph& g) {
  const int n = g.n();
  if (n > kCliqueLimit) throw Error(ErrorCode::TooLarge, "clique oracle limited to n <= 20");
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  int best = 0;
  auto grow = [&](auto&& self, std::uint32_t cand, int size) -> void {
    if (cand == 0) {
      best = std::max(best, size);
      return;
    }
    while (cand) {
      if (size + __builtin_popcount(cand) <= best) return;
      const int v = __builtin_ctz(cand);
      cand &= cand - 1;
      self(self, cand & adj[v], size + 1);
    }
  };
  grow(grow, n == 32 ? ~0u : (1u << n) - 1, 0);
  return best;
}

}  // namespace kim
