#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kim/kim.hpp"

namespace kim::testing {

/// Graph on n vertices whose edges are the set bits of `mask`, pairs taken in
/// row-major order (0,1),(0,2),...,(n-2,n-1).
template <class G = OrderedGraph>
G graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> pairs;
  int bit = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b, ++bit)
      if (mask >> bit & 1) pairs.emplace_back(a, b);
  return G::from_edge_list(n, pairs);
}

inline std::uint64_t graph_count(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

/// Calls f on every labelled graph with exactly n vertices.
template <class G = OrderedGraph, class F>
void for_each_graph(int n, F&& f) {
  const std::uint64_t total = graph_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) f(graph_from_mask<G>(n, mask));
}

/// Random graph with a density drawn per call: sparse, medium or dense.
inline OrderedGraph random_graph(int n, Xorshift64Star& rng) {
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  long long m = 0;
  switch (rng.below(3)) {
    case 0: m = static_cast<long long>(rng.below(static_cast<std::uint64_t>(2 * n) + 1)); break;
    case 1: m = static_cast<long long>(rng.below(static_cast<std::uint64_t>(pairs) + 1)); break;
    default: m = pairs - static_cast<long long>(rng.below(static_cast<std::uint64_t>(std::min<long long>(pairs, 2 * n)) + 1));
  }
  return random_gnm(n, std::min(m, pairs), rng);
}

/// True iff `map` is strictly increasing and sends every edge of h to an edge of g.
inline bool is_ordered_subgraph(const OrderedGraph& g, const OrderedGraph& h, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != h.n()) return false;
  for (int v = 0; v < h.n(); ++v) {
    if (map[v] < 0 || map[v] >= g.n()) return false;
    if (v > 0 && map[v] <= map[v - 1]) return false;
  }
  for (const auto& e : h.edges())
    if (!g.has_edge(map[e.u], map[e.v])) return false;
  return true;
}

/// Random tree with at least `min_leaves` leaves: each new node hangs under a
/// uniformly chosen earlier node.
inline DelayedTree random_tree(int min_leaves, Xorshift64Star& rng) {
  std::vector<int> parent{-1};
  std::vector<int> kids{0};
  int leaves = 0;
  while (leaves < min_leaves) {
    const int p = static_cast<int>(rng.below(parent.size()));
    if (kids[p] == 0 && p != 0) --leaves;
    ++kids[p];
    parent.push_back(p);
    kids.push_back(0);
    ++leaves;
  }
  return DelayedTree::from_parents(parent);
}

/// `count` disjoint random intervals over [0, leaves).
inline std::vector<Interval> random_family(int leaves, int count, Xorshift64Star& rng) {
  std::vector<int> starts(leaves);
  for (int i = 0; i < leaves; ++i) starts[i] = i;
  for (int i = 0; i < count; ++i) std::swap(starts[i], starts[i + rng.below(leaves - i)]);
  starts.resize(count);
  std::sort(starts.begin(), starts.end());
  std::vector<Interval> fam;
  for (int i = 0; i < count; ++i) {
    const int limit = i + 1 < count ? starts[i + 1] - 1 : leaves - 1;
    fam.push_back({starts[i], starts[i] + static_cast<int>(rng.below(limit - starts[i] + 1))});
  }
  return fam;
}

/// The code of the kim::Error thrown by f, or nullopt if f returns normally.
template <class F>
std::optional<ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace kim::testing
