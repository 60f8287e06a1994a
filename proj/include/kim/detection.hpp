#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kim/bounds.hpp"
#include "kim/decomposition.hpp"
#include "kim/error.hpp"
#include "kim/refinement.hpp"
#include "kim/witness.hpp"

namespace kim {

struct HeavyLeaf {
  int leaf = -1;
  std::vector<int> ancestors;  ///< qualifying ancestors, root to leaf
};

/// A leaf with at least h ancestors (itself included) that are non-isolated
/// in their grandparent's quotient. Counts are propagated top-down; the leaf
/// with the highest count wins, the rightmost one on ties. The first h
/// qualifying ancestors from the root are returned.
inline std::optional<HeavyLeaf> heavy_leaf(const DelayedTree& t, int h) {
  const int N = t.size();
  if (t.leaf_count() == 0) return std::nullopt;
  std::vector<char> marked(N, 0);
  for (int z = 0; z < N; ++z) {
    const auto gc = t.grandchildren(z);
    for (const auto& e : t.quotient_edges(z)) marked[gc[e.u]] = marked[gc[e.v]] = 1;
  }
  std::vector<int> count(N, 0);
  for (int x : t.preorder()) count[x] = (t.parent(x) >= 0 ? count[t.parent(x)] : 0) + marked[x];
  int best = -1;
  for (int v = 0; v < t.leaf_count(); ++v) {
    const int leaf = t.leaf_of(v);
    if (best < 0 || count[leaf] >= count[best]) best = leaf;
  }
  if (count[best] < h) return std::nullopt;
  HeavyLeaf out{best, {}};
  for (int x = best; x >= 0; x = t.parent(x))
    if (marked[x]) out.ancestors.push_back(x);
  std::reverse(out.ancestors.begin(), out.ancestors.end());
  out.ancestors.resize(std::max(0, h));
  return out;
}

/// k pairwise adjacent vertices of the realization from 2k-3 qualifying
/// ancestors x_1..x_{2k-3} of `leaf`: for i < k-1 the leftmost leaf of the
/// smallest quotient neighbour of x_{2i+1}, then the leftmost leaf of
/// L(x_{2k-3}). Adjacency is re-checked; failure throws NotAClique.
inline std::vector<int> extract_clique_from_heavy_leaf(const DelayedTree& t, const std::vector<int>& ancestors,
                                                       int k, int leaf = -1) {
  if (k < 1) throw Error(ErrorCode::BadParams, "clique size must be positive");
  if (static_cast<int>(ancestors.size()) < 2 * k - 3)
    throw Error(ErrorCode::BadParams, "need " + std::to_string(2 * k - 3) + " ancestors");
  std::vector<int> clique;
  for (int i = 0; i + 1 < k; ++i) {
    const int x = ancestors[2 * i];
    const int z = t.grandparent(x);
    if (z < 0) throw Error(ErrorCode::NotAClique, "ancestor " + std::to_string(x) + " has no grandparent");
    const int me = t.qpos(x);
    int nb = -1;
    for (const auto& e : t.quotient_edges(z)) {
      const int other = e.u == me ? e.v : e.v == me ? e.u : -1;
      if (other >= 0 && (nb < 0 || other < nb)) nb = other;
    }
    if (nb < 0) throw Error(ErrorCode::NotAClique, "ancestor " + std::to_string(x) + " is isolated");
    clique.push_back(t.span(t.grandchildren(z)[nb]).lo);
  }
  if (k >= 2) {
    clique.push_back(t.span(ancestors[2 * k - 4]).lo);
  } else if (!ancestors.empty()) {
    clique.push_back(t.span(ancestors.front()).lo);
  } else {
    if (leaf < 0) throw Error(ErrorCode::BadParams, "k = 1 without ancestors needs a leaf");
    clique.push_back(t.vertex_of(leaf));
  }
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      if (!realized_adjacent(t, clique[i], clique[j]))
        throw Error(ErrorCode::NotAClique,
                    "vertices " + std::to_string(clique[i]) + " and " + std::to_string(clique[j]) + " not adjacent");
  return clique;
}

/// Parts end right after each clique vertex; the last part runs to n-1.
inline IntervalWitness witness_from_clique(int n, std::vector<int> clique) {
  std::sort(clique.begin(), clique.end());
  clique.pop_back();
  return IntervalWitness::from_cuts(n, clique);
}

/// Lifts a (lazy) looped witness on a refined quotient to its parent graph.
///
/// Monotone class: the parts only grow to cover the parent. Right-extending
/// classes (RR, LR) use E = the parent vertices after the quotient's span:
/// looped K_s -> right-lazy K_{s+1}, left-lazy -> lazy K_{s+1} (E appended),
/// right-lazy -> looped K_s, lazy -> left-lazy K_s (E merged into the last
/// part). Left-extending classes (RL, LL) mirror this with the vertices
/// before the span. The result is verified; failure throws LiftFailed.
inline IntervalWitness lift_witness_one_level(const TracedGraph& child, const OrderedGraph& parent,
                                              const IntervalWitness& w) {
  auto fail = [&](const std::string& why) -> IntervalWitness {
    throw Error(ErrorCode::LiftFailed, "layer " + std::to_string(child.layer) + ": " + why);
  };
  if (!child.provenance) return fail("member has no parent");
  const auto& pv = *child.provenance;
  if (pv.parent_n != parent.n()) return fail("parent graph size mismatch");
  if (w.size() == 0 || !verify_witness(child.graph, w)) return fail("input witness does not verify");
  const int np = parent.n();
  std::vector<Interval> parts;
  for (const auto& p : w.parts) parts.push_back({pv.origin[p.lo].leaves.lo, pv.origin[p.hi].leaves.hi});
  const int span_lo = parts.front().lo;
  const int span_hi = parts.back().hi;
  Variant v = w.variant;

  if (pv.edge_class == EdgeClass::Monotone) {
    parts.front().lo = 0;
    parts.back().hi = np - 1;
  } else if (extends_right(pv.edge_class)) {
    if (span_hi + 1 > np - 1) return fail("nothing to the right of the quotient");
    const Interval extra{span_hi + 1, np - 1};
    parts.front().lo = 0;
    switch (v) {
      case Variant::Looped: parts.push_back(extra); v = Variant::RightLazy; break;
      case Variant::LeftLazy: parts.push_back(extra); v = Variant::Lazy; break;
      case Variant::RightLazy: parts.back().hi = np - 1; v = Variant::Looped; break;
      case Variant::Lazy: parts.back().hi = np - 1; v = Variant::LeftLazy; break;
      case Variant::Plain: return fail("plain witnesses cannot be lifted");
    }
  } else {
    if (span_lo == 0) return fail("nothing to the left of the quotient");
    const Interval extra{0, span_lo - 1};
    parts.back().hi = np - 1;
    switch (v) {
      case Variant::Looped: parts.insert(parts.begin(), extra); v = Variant::LeftLazy; break;
      case Variant::RightLazy: parts.insert(parts.begin(), extra); v = Variant::Lazy; break;
      case Variant::LeftLazy: parts.front().lo = 0; v = Variant::Looped; break;
      case Variant::Lazy: parts.front().lo = 0; v = Variant::RightLazy; break;
      case Variant::Plain: return fail("plain witnesses cannot be lifted");
    }
  }
  IntervalWitness out = IntervalWitness::with_variant(std::move(parts), v);
  if (!verify_witness(parent, out))
    return fail(std::string("lifted ") + std::string(to_string(v)) + " K_" + std::to_string(out.size()) +
                " through class " + std::string(to_string(pv.edge_class)) + " does not verify");
  return out;
}

/// Plain K_t witness on G from a member of layer r (normally 3t-2). Seeds a
/// looped K_1 at the deepest chain member with an edge and lifts it to G.
/// `trace`, when given, receives the witness after every step.
inline IntervalWitness extract_witness_from_rank_chain(const Layers& layers, int r, int index, int t,
                                                       std::vector<IntervalWitness>* trace = nullptr) {
  std::vector<const TracedGraph*> chain(r + 1);
  {
    const TracedGraph* h = &layers[r][index];
    for (int s = r; s >= 0; --s) {
      chain[s] = h;
      if (s > 0) h = &layers[s - 1][h->provenance->parent_index];
    }
  }
  int seed = r;
  while (seed >= 0 && chain[seed]->graph.m() == 0) --seed;
  if (seed < 0) throw Error(ErrorCode::LiftFailed, "no chain member has an edge");
  IntervalWitness w = IntervalWitness::with_variant({{0, chain[seed]->graph.n() - 1}}, Variant::Looped);
  if (!verify_witness(chain[seed]->graph, w)) throw Error(ErrorCode::LiftFailed, "seed does not verify");
  if (trace) trace->push_back(w);
  for (int s = seed; s >= 1; --s) {
    w = lift_witness_one_level(*chain[s], chain[s - 1]->graph, w);
    if (trace) trace->push_back(w);
  }
  if (w.size() < t)
    throw Error(ErrorCode::LiftFailed, "chain of length " + std::to_string(r) + " produced only " +
                                           std::string(to_string(w.variant)) + " K_" + std::to_string(w.size()));
  IntervalWitness plain = to_plain(w, t);
  if (!verify_witness(chain[0]->graph, plain)) throw Error(ErrorCode::LiftFailed, "plain witness does not verify");
  return plain;
}

enum class YesPath { Rank, HeavyLeaf };

constexpr std::string_view to_string(YesPath p) { return p == YesPath::Rank ? "rank" : "heavy-leaf"; }

struct DetectionResult {
  bool yes = false;
  std::optional<IntervalWitness> witness;
  std::optional<YesPath> path;
  double loglog_factor = 0;        ///< log2 log2 f(t)
  std::vector<std::size_t> layer_sizes;
};

/// Approximate K_t test. Yes answers carry a verified t-part witness.
///
/// Computes layers 0..3t-2 and scans every decomposed member for a
/// (2t-3)-heavy leaf. A nonempty layer 3t-2 answers Yes through the rank
/// chain; otherwise the first heavy leaf in layer order answers Yes through a
/// clique; otherwise No.
inline DetectionResult detect_kt(const OrderedGraph& g, int t, const LayerOptions& base = {}) {
  if (t < 1) throw Error(ErrorCode::BadParams, "t must be at least 1");
  DetectionResult res;
  res.loglog_factor = loglog_f(t);
  const int h = 2 * t - 3;
  const int top = 3 * t - 2;
  LayerOptions opt = base;
  opt.probe_last = true;
  // Monotone bipartite graphs have no triangle, hence no 3-heavy leaf.
  opt.probe_monotone = h <= 2;
  auto run = run_layers<std::vector<int>>(
      g, top, opt, [&](const TracedGraph&, const DelayedTree& tree) -> std::optional<std::vector<int>> {
        auto hl = heavy_leaf(tree, h);
        if (!hl) return std::nullopt;
        return extract_clique_from_heavy_leaf(tree, hl->ancestors, t, hl->leaf);
      });
  for (const auto& layer : run.layers) res.layer_sizes.push_back(layer.size());

  if (static_cast<int>(run.layers.size()) > top && !run.layers[top].empty()) {
    res.yes = true;
    res.path = YesPath::Rank;
    res.witness = extract_witness_from_rank_chain(run.layers, top, 0, t);
  } else if (run.first_hit) {
    const auto map = map_to_root(run.layers, run.first_hit->layer, run.first_hit->index);
    std::vector<int> clique;
    for (int v : run.first_hit->value) clique.push_back(map[v]);
    res.yes = true;
    res.path = YesPath::HeavyLeaf;
    res.witness = witness_from_clique(g.n(), clique);
  } else if (h <= 0 && g.n() >= 1 && g.m() == 0) {
    // Edgeless members are not decomposed; any leaf of G is trivially heavy.
    res.yes = true;
    res.path = YesPath::HeavyLeaf;
    res.witness = IntervalWitness::plain({{0, g.n() - 1}});
  }
  if (res.yes && (res.witness->size() != t || !verify_witness(g, *res.witness)))
    throw Error(ErrorCode::InternalError, "detector witness does not verify");
  return res;
}

}  // namespace kim
