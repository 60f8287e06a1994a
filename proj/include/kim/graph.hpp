#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kim/error.hpp"

namespace kim {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct ordered_tag {};
struct unordered_tag {};

/// Simple undirected graph on vertices 0..n-1 with edges stored as u < v,
/// sorted lexicographically, and sorted adjacency in CSR form.
///
/// With `ordered_tag` the numeric vertex order is the linear order of the
/// ordered graph. With `unordered_tag` the labels carry no order semantics.
template <class Tag>
class BasicGraph {
 public:
  BasicGraph() : offsets_(1, 0) {}

  /// Validating constructor. Pairs may be given in either orientation.
  /// Throws OutOfRange, SelfLoop or DuplicateEdge naming the offending pair.
  static BasicGraph from_edge_list(int n, std::span<const std::pair<int, int>> pairs) {
    if (n < 0) throw Error(ErrorCode::OutOfRange, "negative vertex count " + std::to_string(n));
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw Error(ErrorCode::OutOfRange, pair_name(a, b) + " with n=" + std::to_string(n));
      if (a == b) throw Error(ErrorCode::SelfLoop, pair_name(a, b));
      edges.push_back(a < b ? Edge{a, b} : Edge{b, a});
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) throw Error(ErrorCode::DuplicateEdge, pair_name(dup->u, dup->v));
    return BasicGraph(n, std::move(edges));
  }

  static BasicGraph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(pairs));
  }

  /// Trusted constructor: edges must already be canonical (u < v, sorted, unique).
  static BasicGraph from_sorted_edges(int n, std::vector<Edge> edges) {
    return BasicGraph(n, std::move(edges));
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {nbrs_.data() + offsets_[v], nbrs_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex a, Vertex b) const {
    if (degree(a) > degree(b)) std::swap(a, b);
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  /// Number of neighbours of v inside [lo, hi].
  int count_neighbors_in(Vertex v, int lo, int hi) const {
    if (lo > hi) return 0;
    auto nb = neighbors(v);
    return static_cast<int>(std::upper_bound(nb.begin(), nb.end(), hi) -
                            std::lower_bound(nb.begin(), nb.end(), lo));
  }

  std::vector<std::pair<int, int>> edge_pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  friend bool operator==(const BasicGraph& a, const BasicGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  BasicGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (int v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
    nbrs_.resize(2 * edges_.size());
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    // Edges are sorted by (u, v): the first pass appends smaller neighbours in
    // increasing order, the second appends larger ones, so lists end up sorted.
    for (const auto& e : edges_) nbrs_[fill[e.v]++] = e.u;
    for (const auto& e : edges_) nbrs_[fill[e.u]++] = e.v;
  }

  static std::string pair_name(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<Vertex> nbrs_;
};

using OrderedGraph = BasicGraph<ordered_tag>;
using Graph = BasicGraph<unordered_tag>;

/// True iff some split index s puts every edge across [0,s) | [s,n).
/// Edgeless graphs are monotone bipartite.
inline bool is_monotone_bipartite(const OrderedGraph& g) {
  if (g.m() == 0) return true;
  int max_left = -1;
  int min_right = g.n();
  for (const auto& e : g.edges()) {
    max_left = std::max(max_left, e.u);
    min_right = std::min(min_right, e.v);
  }
  return max_left < min_right;
}

/// Relabels vertices so colour classes occupy consecutive blocks ordered by
/// class index (ties by original label). Throws ImproperColoring on a
/// monochromatic edge.
inline OrderedGraph order_by_coloring(const Graph& g, std::span<const int> coloring) {
  if (static_cast<int>(coloring.size()) != g.n())
    throw Error(ErrorCode::BadParams, "coloring has " + std::to_string(coloring.size()) +
                                          " entries for " + std::to_string(g.n()) + " vertices");
  for (const auto& e : g.edges()) {
    if (coloring[e.u] == coloring[e.v])
      throw Error(ErrorCode::ImproperColoring, "edge (" + std::to_string(e.u) + "," +
                                                   std::to_string(e.v) + ") inside class " +
                                                   std::to_string(coloring[e.u]));
  }
  std::vector<int> order(g.n());
  for (int v = 0; v < g.n(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return coloring[a] < coloring[b]; });
  std::vector<int> position(g.n());
  for (int i = 0; i < g.n(); ++i) position[order[i]] = i;
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.m());
  for (const auto& e : g.edges()) pairs.emplace_back(position[e.u], position[e.v]);
  return OrderedGraph::from_edge_list(g.n(), pairs);
}

}  // namespace kim
