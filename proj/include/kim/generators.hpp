#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "kim/coloring.hpp"
#include "kim/error.hpp"
#include "kim/graph.hpp"
#include "kim/rng.hpp"

namespace kim {

/// Monotone K_{t,t}: vertices 0..t-1 complete to t..2t-1.
inline OrderedGraph monotone_biclique(int t) {
  if (t < 0) throw Error(ErrorCode::BadParams, "monotone_biclique needs t >= 0");
  std::vector<Edge> edges;
  for (int a = 0; a < t; ++a)
    for (int b = t; b < 2 * t; ++b) edges.push_back({a, b});
  return OrderedGraph::from_sorted_edges(2 * t, std::move(edges));
}

inline OrderedGraph ordered_clique(int n) {
  if (n < 0) throw Error(ErrorCode::BadParams, "ordered_clique needs n >= 0");
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
  return OrderedGraph::from_sorted_edges(n, std::move(edges));
}

inline OrderedGraph ordered_path(int n) {
  if (n < 0) throw Error(ErrorCode::BadParams, "ordered_path needs n >= 0");
  std::vector<Edge> edges;
  for (int a = 0; a + 1 < n; ++a) edges.push_back({a, a + 1});
  return OrderedGraph::from_sorted_edges(n, std::move(edges));
}

inline OrderedGraph edgeless(int n) {
  if (n < 0) throw Error(ErrorCode::BadParams, "edgeless needs n >= 0");
  return OrderedGraph::from_sorted_edges(n, {});
}

/// Uniform graph with exactly m edges.
///
/// When m is at most half of all pairs, pairs are drawn as (below(n), below(n))
/// and rejected if equal or already present. Otherwise all pairs are listed in
/// lexicographic order and a partial Fisher-Yates shuffle (swap position i with
/// i + below(total - i)) selects the first m.
template <class G = OrderedGraph>
G random_gnm(int n, long long m, Xorshift64Star& rng) {
  if (n < 0) throw Error(ErrorCode::BadParams, "random_gnm needs n >= 0");
  const long long total = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > total)
    throw Error(ErrorCode::BadParams,
                "random_gnm: m=" + std::to_string(m) + " outside [0," + std::to_string(total) + "]");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  if (2 * m <= total) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(2 * m + 1));
    while (static_cast<long long>(pairs.size()) < m) {
      int a = static_cast<int>(rng.below(n));
      int b = static_cast<int>(rng.below(n));
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      const auto key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
      if (seen.insert(key).second) pairs.emplace_back(a, b);
    }
  } else {
    std::vector<std::pair<int, int>> all;
    all.reserve(static_cast<std::size_t>(total));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
    for (long long i = 0; i < m; ++i) {
      const auto j = i + static_cast<long long>(rng.below(static_cast<std::uint64_t>(total - i)));
      std::swap(all[i], all[j]);
    }
    all.resize(static_cast<std::size_t>(m));
    pairs = std::move(all);
  }
  return G::from_edge_list(n, pairs);
}

template <class G = OrderedGraph>
G random_gnm(int n, long long m, std::uint64_t seed) {
  Xorshift64Star rng(seed);
  return random_gnm<G>(n, m, rng);
}

/// Each pair in row-major order gets Blue when coin() is set, Red otherwise.
inline EdgeColoring random_coloring(int n, Xorshift64Star& rng) {
  EdgeColoring c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) c.set(u, v, rng.coin() ? Color::Blue : Color::Red);
  return c;
}

inline EdgeColoring random_coloring(int n, std::uint64_t seed) {
  Xorshift64Star rng(seed);
  return random_coloring(n, rng);
}

struct FamilySpec {
  std::string name;
  std::map<std::string, long long> params;
  std::uint64_t seed = 0;
};

using Generated = std::variant<OrderedGraph, EdgeColoring>;

/// Name-dispatched generator used by the CLI. Families:
/// monotone_biclique(t), ordered_clique(n), ordered_path(n),
/// random_gnm(n, m, seed), random_coloring(n, seed).
inline Generated gen_family(const FamilySpec& spec) {
  auto param = [&](const std::string& key) -> long long {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
      throw Error(ErrorCode::BadParams, spec.name + " needs parameter '" + key + "'");
    return it->second;
  };
  auto small = [&](const std::string& key) {
    const long long v = param(key);
    if (v < 0 || v > (1LL << 30)) throw Error(ErrorCode::BadParams, key + " out of range");
    return static_cast<int>(v);
  };
  if (spec.name == "monotone_biclique") return monotone_biclique(small("t"));
  if (spec.name == "ordered_clique") return ordered_clique(small("n"));
  if (spec.name == "ordered_path") return ordered_path(small("n"));
  if (spec.name == "random_gnm") return random_gnm(small("n"), param("m"), spec.seed);
  if (spec.name == "random_coloring") return random_coloring(small("n"), spec.seed);
  throw Error(ErrorCode::UnknownFamily, "'" + spec.name + "'");
}

}  // namespace kim
