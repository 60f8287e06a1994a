#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "kim/error.hpp"
#include "kim/graph.hpp"
#include "kim/range_index.hpp"
#include "kim/witness.hpp"

namespace kim {

/// Per-vertex arrays of the linear K_3 test.
///   largest[v]   largest neighbour, -1 if isolated
///   forward[v]   1 iff largest[v] > v
///   reach[v]     smallest u > v with a neighbour <= v, n if none
struct K3Arrays {
  std::vector<int> largest;
  std::vector<int> forward;
  std::vector<int> reach;
};

inline K3Arrays k3_arrays(const OrderedGraph& g) {
  const int n = g.n();
  K3Arrays a;
  a.largest.assign(n, -1);
  a.forward.assign(n, 0);
  a.reach.assign(n, n);
  std::vector<int> smallest(n, n);
  for (int v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    if (nb.empty()) continue;
    a.largest[v] = nb.back();
    a.forward[v] = nb.back() > v ? 1 : 0;
    smallest[v] = nb.front();
  }
  // Stack of vertices whose reach is still open, increasing bottom to top.
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    while (!stack.empty() && smallest[v] <= stack.back()) {
      a.reach[stack.back()] = v;
      stack.pop_back();
    }
    stack.push_back(v);
  }
  return a;
}

namespace detail {

/// Some cycle of g as a vertex sequence, or empty if g is a forest.
inline std::vector<int> find_cycle(const OrderedGraph& g) {
  const int n = g.n();
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  std::vector<std::vector<int>> forest(n);
  for (const auto& e : g.edges()) {
    const int a = find(e.u), b = find(e.v);
    if (a != b) {
      root[a] = b;
      forest[e.u].push_back(e.v);
      forest[e.v].push_back(e.u);
      continue;
    }
    // e closes a cycle: tree path from e.u to e.v plus e.
    std::vector<int> prev(n, -2);
    std::queue<int> q;
    q.push(e.u);
    prev[e.u] = -1;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      if (x == e.v) break;
      for (int y : forest[x])
        if (prev[y] == -2) {
          prev[y] = x;
          q.push(y);
        }
    }
    std::vector<int> cycle;
    for (int x = e.v; x != -1; x = prev[x]) cycle.push_back(x);
    return cycle;
  }
  return {};
}

}  // namespace detail

/// Cut after the cycle's minimum vertex and after its smaller cycle
/// neighbour.
inline IntervalWitness k3_witness_from_cycle(int n, const std::vector<int>& cycle) {
  const auto it = std::min_element(cycle.begin(), cycle.end());
  const std::size_t i = static_cast<std::size_t>(it - cycle.begin());
  const int len = static_cast<int>(cycle.size());
  const int next = cycle[(i + 1) % len];
  const int prev = cycle[(i + len - 1) % len];
  return IntervalWitness::from_cuts(n, {*it, std::min(next, prev)});
}

struct K3Result {
  bool yes = false;
  std::optional<IntervalWitness> witness;
};

/// Exact K_3 interval-minor test. With m >= n a cycle gives the witness;
/// otherwise each v is tried as the end of the first part, with L = reach[v]
/// and R = max largest[0..v]:
///   some u in [L, R-1] with forward[u]     -> [0,v] [v+1,u] [u+1,n-1]
///   max largest over [v+1, L-1] exceeds L   -> [0,v] [v+1,L] [L+1,n-1]
inline K3Result detect_k3(const OrderedGraph& g) {
  const int n = g.n();
  K3Result res;
  auto done = [&](IntervalWitness w) {
    if (!verify_witness(g, w)) throw Error(ErrorCode::InternalError, "K3 witness does not verify");
    res.yes = true;
    res.witness = std::move(w);
    return res;
  };
  if (g.m() >= n && n > 0) {
    const auto cycle = detail::find_cycle(g);
    if (cycle.size() < 3) throw Error(ErrorCode::InternalError, "no cycle despite m >= n");
    return done(k3_witness_from_cycle(n, cycle));
  }
  const K3Arrays a = k3_arrays(g);
  const RangeIndex fwd(a.forward);
  const RangeIndex big(a.largest);
  int reach_right = -1;
  for (int v = 0; v < n; ++v) {
    reach_right = std::max(reach_right, a.largest[v]);
    const int L = a.reach[v];
    const int R = reach_right;
    if (L >= n || L >= R) continue;
    const auto f = fwd.max(L, R - 1);
    if (f.value == 1) return done(IntervalWitness::from_cuts(n, {v, f.pos}));
    if (v + 1 <= L - 1 && big.max(v + 1, L - 1).value > L) return done(IntervalWitness::from_cuts(n, {v, L}));
  }
  return res;
}

}  // namespace kim
