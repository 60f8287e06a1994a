#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "kim/decomposition.hpp"
#include "kim/delayed_tree.hpp"
#include "kim/error.hpp"
#include "kim/graph.hpp"

namespace kim {

// ---------------------------------------------------------------- labels

/// Fills labels: None without a grandparent; R with an adjacent greater
/// cousin; else L with an adjacent smaller cousin; else O. An O child of a
/// node with at least three children that follows an R (L) sibling becomes
/// OR (OL).
inline void label_tree(DelayedTree& t) {
  const int N = t.size();
  std::vector<char> greater(N, 0), smaller(N, 0);
  for (int z = 0; z < N; ++z) {
    const auto gc = t.grandchildren(z);
    for (const auto& e : t.quotient_edges(z)) {
      greater[gc[e.u]] = 1;
      smaller[gc[e.v]] = 1;
    }
  }
  std::vector<Label> labels(N, Label::None);
  for (int x = 0; x < N; ++x) {
    if (t.grandparent(x) < 0) continue;
    labels[x] = greater[x] ? Label::R : smaller[x] ? Label::L : Label::O;
  }
  std::vector<Label> refined = labels;
  for (int x = 0; x < N; ++x) {
    const auto kids = t.children(x);
    if (kids.size() < 3) continue;
    for (std::size_t i = 1; i < kids.size(); ++i) {
      if (labels[kids[i]] != Label::O) continue;
      const Label pred = labels[kids[i - 1]];
      if (pred == Label::R) refined[kids[i]] = Label::OR;
      if (pred == Label::L) refined[kids[i]] = Label::OL;
    }
  }
  t.set_labels(std::move(refined));
}

inline DelayedTree labeled_decomposition(const OrderedGraph& g) {
  DelayedTree t = build_distinguishing(g);
  label_tree(t);
  return t;
}

/// True if some node with at least three children has two consecutive
/// children labelled O (visible after labelling as an unrefined O that is not
/// a first child).
inline bool has_consecutive_o(const DelayedTree& t) {
  for (int x = 0; x < t.size(); ++x) {
    const auto kids = t.children(x);
    if (kids.size() < 3) continue;
    for (std::size_t i = 1; i < kids.size(); ++i)
      if (t.label(kids[i]) == Label::O) return true;
  }
  return false;
}

// ---------------------------------------------------------------- traced graphs

enum class EdgeClass { Monotone, RR, RL, LR, LL };

constexpr std::string_view to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::Monotone: return "mb";
    case EdgeClass::RR: return "RR";
    case EdgeClass::RL: return "RL";
    case EdgeClass::LR: return "LR";
    case EdgeClass::LL: return "LL";
  }
  return "?";
}

/// Classes whose lift extends to the right of the quotient (type R anchors).
constexpr bool extends_right(EdgeClass c) { return c == EdgeClass::RR || c == EdgeClass::LR; }

struct VertexOrigin {
  int node = -1;        ///< grandchild node in the parent's decomposition
  Interval leaves;      ///< L(node) in parent vertex coordinates
  Label type = Label::None;
};

struct TrimRecord {
  int dropped_first_child = 0;  ///< children of an O first child
  int dropped_left = 0;
  int dropped_right = 0;
};

struct Provenance {
  int parent_index = -1;  ///< index in the previous layer
  int node = -1;          ///< quotient node in the parent's decomposition
  EdgeClass edge_class = EdgeClass::Monotone;
  std::vector<VertexOrigin> origin;
  TrimRecord trim;
  int parent_n = 0;
};

struct TracedGraph {
  OrderedGraph graph;
  int layer = 0;
  std::optional<Provenance> provenance;
};

namespace detail {

inline bool quotient_is_monotone(const std::vector<Edge>& edges) {
  int max_left = -1, min_right = 1 << 30;
  for (const auto& e : edges) {
    max_left = std::max(max_left, e.u);
    min_right = std::min(min_right, e.v);
  }
  return max_left < min_right;
}

constexpr bool primed_r(Label l) { return l == Label::R || l == Label::OR; }

}  // namespace detail

/// Refined quotients of `h`, given its labelled decomposition. Quotients are
/// visited in preorder; a non-monotone quotient yields its RR, RL, LR, LL
/// graphs in that order.
inline std::vector<TracedGraph> refined_quotients(const TracedGraph& h, int self_index, const DelayedTree& t) {
  std::vector<TracedGraph> out;
  if (is_monotone_bipartite(h.graph)) return out;
  const int parent_n = h.graph.n();
  for (int x : t.preorder()) {
    const auto gc = t.grandchildren(x);
    if (gc.empty()) continue;
    const int k = static_cast<int>(gc.size());
    const auto& edges = t.quotient_edges(x);
    if (detail::quotient_is_monotone(edges)) {
      TracedGraph q;
      q.graph = t.quotient_graph(x);
      q.layer = h.layer + 1;
      Provenance p;
      p.parent_index = self_index;
      p.node = x;
      p.edge_class = EdgeClass::Monotone;
      p.parent_n = parent_n;
      p.origin.reserve(k);
      for (int y : gc) p.origin.push_back({y, t.span(y), t.type(y)});
      q.provenance = std::move(p);
      out.push_back(std::move(q));
      continue;
    }
    if (t.child_count(x) < 3)
      throw Error(ErrorCode::InternalError,
                  "non-monotone quotient at node " + std::to_string(x) + " with fewer than three children");
    const int first_child = t.children(x).front();
    const int start = t.label(first_child) == Label::O ? t.child_count(first_child) : 0;
    for (int p = start; p < k; ++p) {
      const Label ty = t.type(gc[p]);
      if (ty != Label::R && ty != Label::L && ty != Label::OR && ty != Label::OL)
        throw Error(ErrorCode::InternalError, "quotient vertex " + std::to_string(gc[p]) + " has type " +
                                                  std::string(to_string(ty)));
    }
    for (EdgeClass cls : {EdgeClass::RR, EdgeClass::RL, EdgeClass::LR, EdgeClass::LL}) {
      const bool left_r = cls == EdgeClass::RR || cls == EdgeClass::RL;
      const bool right_r = cls == EdgeClass::RR || cls == EdgeClass::LR;
      const Label anchor = extends_right(cls) ? Label::R : Label::L;
      int first = -1, last = -1;
      for (int p = start; p < k; ++p) {
        if (t.type(gc[p]) != anchor) continue;
        if (first < 0) first = p;
        last = p;
      }
      TracedGraph q;
      q.layer = h.layer + 1;
      Provenance pv;
      pv.parent_index = self_index;
      pv.node = x;
      pv.edge_class = cls;
      pv.parent_n = parent_n;
      pv.trim.dropped_first_child = start;
      if (first < 0) {
        pv.trim.dropped_left = k - start;
        q.graph = OrderedGraph::from_sorted_edges(0, {});
      } else {
        pv.trim.dropped_left = first - start;
        pv.trim.dropped_right = k - 1 - last;
        std::vector<Edge> kept;
        for (const auto& e : edges) {
          if (e.u < first || e.v > last) continue;
          if (detail::primed_r(t.type(gc[e.u])) != left_r || detail::primed_r(t.type(gc[e.v])) != right_r) continue;
          kept.push_back({e.u - first, e.v - first});
        }
        q.graph = OrderedGraph::from_sorted_edges(last - first + 1, std::move(kept));
        pv.origin.reserve(last - first + 1);
        for (int p = first; p <= last; ++p) pv.origin.push_back({gc[p], t.span(gc[p]), t.type(gc[p])});
      }
      q.provenance = std::move(pv);
      out.push_back(std::move(q));
    }
  }
  return out;
}

inline std::vector<TracedGraph> refined_quotients(const TracedGraph& h, int self_index = -1) {
  if (is_monotone_bipartite(h.graph)) return {};
  return refined_quotients(h, self_index, labeled_decomposition(h.graph));
}

// ---------------------------------------------------------------- layers

using Layers = std::vector<std::vector<TracedGraph>>;

struct LayerOptions {
  int threads = 1;
  /// Also decompose monotone bipartite members that have edges, so a probe
  /// sees every nontrivial tree.
  bool probe_monotone = false;
  /// Decompose and probe the members of layer r_max too.
  bool probe_last = false;
};

template <class R>
struct ProbeHit {
  int layer = -1;
  int index = -1;
  R value;
};

template <class R>
struct LayerRun {
  Layers layers;
  std::optional<ProbeHit<R>> first_hit;
};

/// Expands layers 0..r_max. `probe(member, tree)` runs on every decomposed
/// member and returns std::optional<R>; the first hit in (layer, index) order
/// is kept. Members of a layer are processed in parallel chunks when
/// `threads > 1`; results are merged in input order.
template <class R, class Probe>
LayerRun<R> run_layers(const OrderedGraph& g, int r_max, const LayerOptions& opt, Probe&& probe) {
  LayerRun<R> run;
  TracedGraph root;
  root.graph = g;
  run.layers.push_back({std::move(root)});
  for (int r = 0; r <= r_max; ++r) {
    const auto& layer = run.layers[r];
    const int count = static_cast<int>(layer.size());
    std::vector<std::vector<TracedGraph>> produced(count);
    std::vector<std::optional<R>> hits(count);
    const bool expand = r < r_max;
    if (!expand && !opt.probe_last) break;
    auto work = [&](int lo, int hi) {
      for (int i = lo; i < hi; ++i) {
        const TracedGraph& h = layer[i];
        const bool mono = is_monotone_bipartite(h.graph);
        if (mono && !(opt.probe_monotone && h.graph.m() > 0)) continue;
        const DelayedTree t = labeled_decomposition(h.graph);
        hits[i] = probe(h, t);
        if (expand && !mono) produced[i] = refined_quotients(h, i, t);
      }
    };
    const int threads = std::max(1, std::min(opt.threads, count));
    if (threads == 1) {
      work(0, count);
    } else {
      std::vector<std::thread> pool;
      const int chunk = (count + threads - 1) / threads;
      for (int w = 0; w < threads; ++w) {
        const int lo = w * chunk, hi = std::min(count, lo + chunk);
        if (lo < hi) pool.emplace_back(work, lo, hi);
      }
      for (auto& th : pool) th.join();
    }
    if (!run.first_hit)
      for (int i = 0; i < count; ++i)
        if (hits[i]) {
          run.first_hit = ProbeHit<R>{r, i, std::move(*hits[i])};
          break;
        }
    if (!expand) break;
    std::vector<TracedGraph> next;
    for (auto& v : produced)
      for (auto& q : v) next.push_back(std::move(q));
    run.layers.push_back(std::move(next));
  }
  return run;
}

/// Layers 0..r_max; once a layer is empty the remaining ones are empty too.
inline Layers g_layers(const OrderedGraph& g, int r_max, const LayerOptions& opt = {}) {
  if (r_max < 0) throw Error(ErrorCode::BadParams, "r_max must be nonnegative");
  auto run = run_layers<char>(g, r_max, opt, [](const TracedGraph&, const DelayedTree&) {
    return std::optional<char>{};
  });
  return std::move(run.layers);
}

struct RankReport {
  int rank = 0;
  bool exact = true;  ///< false means "at least rank"
};

/// Largest r <= cap with a nonempty layer; exact when layer r+1 is empty.
inline RankReport delayed_rank(const OrderedGraph& g, int cap, const LayerOptions& opt = {}) {
  if (cap < 0) throw Error(ErrorCode::BadParams, "cap must be nonnegative");
  const Layers layers = g_layers(g, cap + 1, opt);
  if (!layers[cap + 1].empty()) return {cap, false};
  int r = 0;
  while (r + 1 <= cap && !layers[r + 1].empty()) ++r;
  return {r, true};
}

/// Vertex map of a layer member into G: each step sends a vertex to the
/// leftmost leaf of its origin node.
inline std::vector<int> map_to_root(const Layers& layers, int r, int index) {
  const TracedGraph* h = &layers[r][index];
  std::vector<int> map(h->graph.n());
  for (int v = 0; v < h->graph.n(); ++v) map[v] = v;
  while (h->provenance) {
    const auto& p = *h->provenance;
    for (int& v : map) v = p.origin[v].leaves.lo;
    h = &layers[h->layer - 1][p.parent_index];
  }
  return map;
}

/// One line per member: "r idx n m class parent_idx".
inline void write_layer_dump(std::ostream& out, const Layers& layers) {
  for (std::size_t r = 0; r < layers.size(); ++r)
    for (std::size_t i = 0; i < layers[r].size(); ++i) {
      const auto& h = layers[r][i];
      out << r << ' ' << i << ' ' << h.graph.n() << ' ' << h.graph.m() << ' '
          << (h.provenance ? to_string(h.provenance->edge_class) : std::string_view("root")) << ' '
          << (h.provenance ? h.provenance->parent_index : -1) << '\n';
    }
}

}  // namespace kim
