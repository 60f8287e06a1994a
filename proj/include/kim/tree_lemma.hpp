#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "kim/delayed_tree.hpp"
#include "kim/error.hpp"
#include "kim/witness.hpp"

namespace kim {

/// A node and `b` family intervals inside L(node), no child of the node
/// meeting two of them.
struct BranchingNode {
  int node = -1;
  std::vector<Interval> intervals;
};

/// Intervals I_1..I_k with nodes x_1..x_k such that L(x_j) contains
/// I_j..I_k and misses I_{j-1}.
struct IntervalPath {
  std::vector<Interval> intervals;
  std::vector<int> nodes;
};

using TreeCertificate = std::variant<BranchingNode, IntervalPath>;

inline bool in_family(const std::vector<Interval>& fam, const Interval& iv) {
  return std::find(fam.begin(), fam.end(), iv) != fam.end();
}

inline bool is_branching_certificate(const DelayedTree& t, const std::vector<Interval>& fam,
                                     const BranchingNode& c, int b) {
  if (c.node < 0 || c.node >= t.size() || static_cast<int>(c.intervals.size()) != b) return false;
  const Interval host = t.span(c.node);
  for (std::size_t i = 0; i < c.intervals.size(); ++i) {
    if (!in_family(fam, c.intervals[i]) || !host.contains(c.intervals[i])) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (c.intervals[i] == c.intervals[j]) return false;
  }
  for (int y : t.children(c.node)) {
    int hits = 0;
    for (const auto& iv : c.intervals) hits += t.span(y).intersects(iv) ? 1 : 0;
    if (hits > 1) return false;
  }
  return true;
}

inline bool is_interval_path(const DelayedTree& t, const std::vector<Interval>& fam, const IntervalPath& p, int k) {
  if (static_cast<int>(p.intervals.size()) != k || static_cast<int>(p.nodes.size()) != k) return false;
  for (int j = 0; j < k; ++j) {
    if (p.nodes[j] < 0 || p.nodes[j] >= t.size() || !in_family(fam, p.intervals[j])) return false;
    const Interval s = t.span(p.nodes[j]);
    for (int i = j; i < k; ++i)
      if (!s.contains(p.intervals[i])) return false;
    if (j > 0 && s.intersects(p.intervals[j - 1])) return false;
  }
  return true;
}

/// Either certificate of the ordered-tree lemma for a family of disjoint leaf
/// intervals with |fam| >= 2(b+2)^k.
///
/// w(x) counts family intervals inside L(x). Nodes are first scanned in
/// preorder for a branching certificate: b children with w > 0, or 2b-1
/// intervals split across children (every other one is taken). Failing that,
/// the path descends from the root, each step taking the descendant with the
/// largest w not exceeding w(prev) - 3 (shallowest, then leftmost, on ties).
inline TreeCertificate find_branching_or_interval_path(const DelayedTree& t, std::vector<Interval> fam, int b,
                                                       int k) {
  if (b < 1 || k < 1) throw Error(ErrorCode::PreconditionViolated, "b and k must be positive");
  const long double need = 2.0L * std::pow(static_cast<long double>(b + 2), k);
  if (static_cast<long double>(fam.size()) < need)
    throw Error(ErrorCode::PreconditionViolated,
                "family of size " + std::to_string(fam.size()) + " is below 2(b+2)^k");
  const int n = t.leaf_count();
  std::sort(fam.begin(), fam.end(), [](const Interval& a, const Interval& c) { return a.lo < c.lo; });
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (fam[i].empty() || fam[i].lo < 0 || fam[i].hi >= n)
      throw Error(ErrorCode::PreconditionViolated, "family interval outside the leaves");
    if (i > 0 && fam[i].lo <= fam[i - 1].hi)
      throw Error(ErrorCode::PreconditionViolated, "family intervals overlap");
  }

  const int N = t.size();
  const auto& order = t.preorder();
  std::vector<int> pos(N), subtree(N, 1);
  for (int i = 0; i < N; ++i) pos[order[i]] = i;
  for (int i = N - 1; i >= 0; --i)
    if (t.parent(order[i]) >= 0) subtree[t.parent(order[i])] += subtree[order[i]];

  // Deepest node containing each interval, weights, and one sample interval per subtree.
  std::vector<int> owner(fam.size());
  std::vector<int> w(N, 0), sample(N, -1);
  std::vector<std::vector<int>> owned(N);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    owner[i] = t.lca().lca(t.leaf_of(fam[i].lo), t.leaf_of(fam[i].hi));
    ++w[owner[i]];
    owned[owner[i]].push_back(static_cast<int>(i));
    if (sample[owner[i]] < 0) sample[owner[i]] = static_cast<int>(i);
  }
  for (int i = N - 1; i >= 0; --i) {
    const int x = order[i];
    const int p = t.parent(x);
    if (p < 0) continue;
    w[p] += w[x];
    if (sample[p] < 0 || (sample[x] >= 0 && sample[x] < sample[p])) sample[p] = sample[x];
  }

  auto checked = [&](TreeCertificate c) -> TreeCertificate {
    const bool ok = std::visit(
        [&](const auto& v) {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, BranchingNode>)
            return is_branching_certificate(t, fam, v, b);
          else
            return is_interval_path(t, fam, v, k);
        },
        c);
    if (!ok) throw Error(ErrorCode::InternalError, "tree lemma produced an invalid certificate");
    return c;
  };

  for (int x : order) {
    if (w[x] == 0) continue;
    std::vector<int> busy;
    for (int y : t.children(x))
      if (w[y] > 0) busy.push_back(y);
    if (static_cast<int>(busy.size()) >= b) {
      BranchingNode c{x, {}};
      for (int i = 0; i < b; ++i) c.intervals.push_back(fam[sample[busy[i]]]);
      return checked(c);
    }
    if (static_cast<int>(owned[x].size()) >= 2 * b - 1) {
      BranchingNode c{x, {}};
      for (int i = 0; i < b; ++i) c.intervals.push_back(fam[owned[x][2 * i]]);
      return checked(c);
    }
  }

  IntervalPath path;
  path.nodes.push_back(t.root());
  for (int i = 1; i < k; ++i) {
    const int prev = path.nodes.back();
    const int limit = w[prev] - 3;
    int best = -1;
    for (int q = pos[prev] + 1; q < pos[prev] + subtree[prev]; ++q) {
      const int y = order[q];
      if (w[y] > limit) continue;
      if (best < 0 || w[y] > w[best] || (w[y] == w[best] && t.depth(y) < t.depth(best))) best = y;
    }
    if (best < 0) throw Error(ErrorCode::InternalError, "interval path descent stalled");
    path.nodes.push_back(best);
  }
  for (int i = 0; i < k; ++i) {
    const Interval host = t.span(path.nodes[i]);
    int pick = -1;
    for (std::size_t j = 0; j < fam.size() && pick < 0; ++j) {
      if (!host.contains(fam[j])) continue;
      if (i + 1 < k && t.span(path.nodes[i + 1]).intersects(fam[j])) continue;
      pick = static_cast<int>(j);
    }
    if (pick < 0) throw Error(ErrorCode::InternalError, "no interval for path step " + std::to_string(i + 1));
    path.intervals.push_back(fam[pick]);
  }
  return checked(path);
}

}  // namespace kim
