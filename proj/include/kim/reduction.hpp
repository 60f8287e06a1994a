#pragma once

#include <string>
#include <vector>

#include "kim/error.hpp"
#include "kim/graph.hpp"
#include "kim/witness.hpp"

namespace kim {

struct HatInstance {
  OrderedGraph graph;
  int t = 0;
};

/// Ordered graph on 2n-1 vertices: original vertex i sits at 2i, and a
/// universal vertex sits at every odd position. Contains K_{n-1+k} as an
/// interval minor iff g has a k-clique.
inline HatInstance build_hat(const Graph& g, int k) {
  const int n = g.n();
  if (k < 1 || k > n)
    throw Error(ErrorCode::BadK, "k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  const int size = 2 * n - 1;
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : g.edges()) pairs.emplace_back(2 * e.u, 2 * e.v);
  for (int u = 1; u < size; u += 2)
    for (int x = 0; x < size; ++x)
      if (x != u && !(x % 2 == 1 && x < u)) pairs.emplace_back(u, x);
  return {OrderedGraph::from_edge_list(size, pairs), n - 1 + k};
}

/// Reads a k-clique of g off a witness for the hat instance: parts holding
/// no universal vertex are single original vertices, and at least k of them
/// exist. Returns the first k, checked pairwise adjacent.
inline std::vector<int> decode_witness(const Graph& g, int k, const IntervalWitness& w) {
  const HatInstance hat = build_hat(g, k);
  if (w.size() != hat.t || !verify_witness(hat.graph, w))
    throw Error(ErrorCode::PreconditionViolated, "witness is not a K_" + std::to_string(hat.t) + " of the hat graph");
  std::vector<int> clique;
  for (const auto& p : w.parts)
    if (p.size() == 1 && p.lo % 2 == 0 && static_cast<int>(clique.size()) < k) clique.push_back(p.lo / 2);
  if (static_cast<int>(clique.size()) < k)
    throw Error(ErrorCode::NotAClique, "only " + std::to_string(clique.size()) + " original singletons");
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      if (!g.has_edge(clique[i], clique[j]))
        throw Error(ErrorCode::NotAClique,
                    std::to_string(clique[i]) + " and " + std::to_string(clique[j]) + " are not adjacent");
  return clique;
}

}  // namespace kim
