#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "kim/delayed_tree.hpp"
#include "kim/error.hpp"
#include "kim/graph.hpp"
#include "kim/range_index.hpp"

namespace kim {

/// For each i in [0, n-2], the smallest and largest vertex adjacent to exactly
/// one of i and i+1. Empty differences give the sentinels n (smallest) and -1
/// (largest).
struct NeighborhoodBreaks {
  std::vector<int> lowest;
  std::vector<int> highest;
};

inline NeighborhoodBreaks neighborhood_breaks(const OrderedGraph& g) {
  const int n = g.n();
  NeighborhoodBreaks br;
  if (n < 2) return br;
  br.lowest.assign(n - 1, n);
  br.highest.assign(n - 1, -1);
  for (int i = 0; i + 1 < n; ++i) {
    auto a = g.neighbors(i);
    auto b = g.neighbors(i + 1);
    // Sorted lists share a prefix; the smaller of the first differing entries
    // lies in exactly one of them.
    std::size_t p = 0, q = 0;
    while (p < a.size() && q < b.size() && a[p] == b[q]) ++p, ++q;
    int lo = n;
    if (p < a.size() && q < b.size()) {
      lo = std::min(a[p], b[q]);
    } else if (p < a.size()) {
      lo = a[p];
    } else if (q < b.size()) {
      lo = b[q];
    }
    // Largest: first mismatch scanning from the back.
    std::size_t r = a.size(), s = b.size();
    while (r > 0 && s > 0 && a[r - 1] == b[s - 1]) --r, --s;
    int hi = -1;
    if (r > 0 && s > 0) {
      hi = std::max(a[r - 1], b[s - 1]);
    } else if (r > 0) {
      hi = a[r - 1];
    } else if (s > 0) {
      hi = b[s - 1];
    }
    br.lowest[i] = lo;
    br.highest[i] = hi;
  }
  return br;
}

namespace detail {

/// Positions j in [a, b-1] with lowest[j] < a or highest[j] > b, ascending.
inline std::vector<int> module_cuts(const RangeIndex& lowest, const RangeIndex& highest, int a, int b) {
  std::vector<int> cuts;
  if (b <= a) return cuts;
  std::vector<std::pair<int, int>> todo{{a, b - 1}};
  while (!todo.empty()) {
    auto [l, r] = todo.back();
    todo.pop_back();
    if (l > r) continue;
    const auto q = lowest.min(l, r);
    if (q.value >= a) continue;
    cuts.push_back(q.pos);
    todo.push_back({l, q.pos - 1});
    todo.push_back({q.pos + 1, r});
  }
  todo.push_back({a, b - 1});
  while (!todo.empty()) {
    auto [l, r] = todo.back();
    todo.pop_back();
    if (l > r) continue;
    const auto q = highest.max(l, r);
    if (q.value <= b) continue;
    cuts.push_back(q.pos);
    todo.push_back({l, q.pos - 1});
    todo.push_back({q.pos + 1, r});
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

}  // namespace detail

/// Distinguishing delayed decomposition. Nodes are numbered in preorder.
///
/// A node over [a, b] gets one leaf child when a == b; two children {a} and
/// [a+1, b] when [a, b] is a module; otherwise one child per local module,
/// cut after every j whose neighbourhood break leaves [a, b]. Quotient edges
/// come from one extended LCA query per graph edge.
inline DelayedTree build_distinguishing(const OrderedGraph& g) {
  const int n = g.n();
  const auto br = neighborhood_breaks(g);
  const RangeIndex lowest(br.lowest);
  const RangeIndex highest(br.highest);

  struct Frame {
    int a, b, parent;
    bool leaf;
  };
  std::vector<int> parent;
  parent.reserve(3 * static_cast<std::size_t>(n) + 1);
  std::vector<Frame> stack{{0, n - 1, -1, false}};
  std::vector<Frame> kids;
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const int id = static_cast<int>(parent.size());
    parent.push_back(f.parent);
    if (f.leaf || f.a > f.b) continue;
    kids.clear();
    if (f.a == f.b) {
      kids.push_back({f.a, f.a, id, true});
    } else {
      const auto cuts = detail::module_cuts(lowest, highest, f.a, f.b);
      if (cuts.empty()) {
        kids.push_back({f.a, f.a, id, false});
        kids.push_back({f.a + 1, f.b, id, false});
      } else {
        int lo = f.a;
        for (int j : cuts) {
          kids.push_back({lo, j, id, false});
          lo = j + 1;
        }
        kids.push_back({lo, f.b, id, false});
      }
    }
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }

  DelayedTree t = DelayedTree::from_parents(std::move(parent));

  // Quotient edge of (u, v), u < v: z is the deepest common ancestor of the
  // two leaves and the pair is (grandchild of z above u, grandchild above v).
  // One sweep visits edges by u with v ascending and climbs u's ancestor
  // chain to z; a second sweep visits them by v with u descending and climbs
  // v's chain. Both climbs are monotone, so memory access stays local. A
  // climb longer than kClimb steps falls back to an LCA query.
  const int m = g.m();
  constexpr int kClimb = 16;
  std::vector<int> owner(m, -1), start(t.size() + 1, 0);
  std::vector<Edge> pairs(m);
  std::vector<int> chain;
  std::size_t pos = 0;
  auto reset_chain = [&](int vertex) {
    chain.assign({t.leaf_of(vertex), t.parent(t.leaf_of(vertex))});
    pos = 1;
  };
  auto climb = [&](auto done) {
    for (int steps = 0; steps < kClimb && !done(chain[pos]); ++steps) {
      if (pos + 1 == chain.size()) chain.push_back(t.parent(chain.back()));
      ++pos;
    }
    return done(chain[pos]);
  };
  std::vector<int> first_edge(n + 1, 0);
  int current_u = -1;
  for (int i = 0; i < m; ++i) {
    const auto& e = g.edges()[i];
    ++first_edge[e.u + 1];
    if (e.u != current_u) reset_chain(current_u = e.u);
    if (climb([&](int x) { return t.span(x).hi >= e.v; })) {
      owner[i] = chain[pos];
      pairs[i].u = t.qpos(chain[pos - 2]);
    }
  }
  for (int v = 0; v < n; ++v) first_edge[v + 1] += first_edge[v];
  std::vector<int> seen(n, 0);
  for (int v = 0; v < n; ++v) {
    const auto nb = g.neighbors(v);
    const auto below = std::lower_bound(nb.begin(), nb.end(), v);
    if (nb.begin() == below) continue;
    reset_chain(v);
    for (auto it = below; it != nb.begin();) {
      const int u = *--it;
      // v grows across the outer loop, so (u, v) is the next unseen edge of u.
      const int i = first_edge[u] + seen[u]++;
      if (owner[i] >= 0 && climb([&](int x) { return t.span(x).lo <= u; })) {
        pairs[i].v = t.qpos(chain[pos - 2]);
      } else {
        const auto q = t.lca().query(t.leaf_of(u), t.leaf_of(v));
        owner[i] = q.z;
        pairs[i] = {t.qpos(q.gu), t.qpos(q.gv)};
      }
      ++start[owner[i] + 1];
    }
  }
  for (int x = 0; x < t.size(); ++x) start[x + 1] += start[x];
  std::vector<std::vector<Edge>> qedges(t.size());
  for (int x = 0; x < t.size(); ++x) qedges[x].reserve(start[x + 1] - start[x]);
  for (int i = 0; i < m; ++i) qedges[owner[i]].push_back(pairs[i]);
  for (auto& q : qedges) {
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
  }
  t.set_quotient_edges(std::move(qedges));
  return t;
}

/// Adjacency of leaves u and v in the realization, by one extended LCA query.
inline bool realized_adjacent(const DelayedTree& t, int u, int v) {
  if (u == v) return false;
  const auto q = t.lca().query(t.leaf_of(u), t.leaf_of(v));
  if (q.gu < 0 || q.gv < 0) return false;
  int a = t.qpos(q.gu), b = t.qpos(q.gv);
  if (a > b) std::swap(a, b);
  const auto& edges = t.quotient_edges(q.z);
  return std::binary_search(edges.begin(), edges.end(), Edge{a, b});
}

/// The realized ordered graph. Each quotient edge between grandchildren y, y'
/// contributes L(y) x L(y'); distinct quotient edges give disjoint pairs.
inline OrderedGraph realization(const DelayedTree& t) {
  t.validate();
  std::vector<Edge> edges;
  for (int z = 0; z < t.size(); ++z) {
    const auto gc = t.grandchildren(z);
    for (const auto& e : t.quotient_edges(z)) {
      const Interval a = t.span(gc[e.u]);
      const Interval b = t.span(gc[e.v]);
      for (int u = a.lo; u <= a.hi; ++u)
        for (int v = b.lo; v <= b.hi; ++v) edges.push_back({u, v});
    }
  }
  std::sort(edges.begin(), edges.end());
  return OrderedGraph::from_sorted_edges(t.leaf_count(), std::move(edges));
}

namespace detail {

/// Vertices outside `outer` adjacent to some vertex of `inner`.
inline std::vector<int> outside_neighbors(const OrderedGraph& g, Interval inner, Interval outer) {
  std::vector<int> out;
  for (int u = inner.lo; u <= inner.hi; ++u)
    for (int v : g.neighbors(u))
      if (!outer.contains(v)) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// For every node with at least three children and every pair of consecutive
/// children, some vertex outside the node is complete to one child's leaves
/// and anticomplete to the other's.
inline bool check_distinguishing(const DelayedTree& t, const OrderedGraph& g) {
  for (int x = 0; x < t.size(); ++x) {
    if (t.child_count(x) < 3) continue;
    const auto kids = t.children(x);
    const Interval outer = t.span(x);
    for (std::size_t i = 0; i + 1 < kids.size(); ++i) {
      const Interval a = t.span(kids[i]);
      const Interval b = t.span(kids[i + 1]);
      const Interval both{a.lo, b.hi};
      bool found = false;
      for (int v : detail::outside_neighbors(g, both, outer)) {
        const int ca = g.count_neighbors_in(v, a.lo, a.hi);
        const int cb = g.count_neighbors_in(v, b.lo, b.hi);
        if ((ca == a.size() && cb == 0) || (cb == b.size() && ca == 0)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

/// Every vertex outside L(parent(y)) is complete or anticomplete to L(y), for
/// every non-root node y. This is the strongest instance of the property for
/// all ancestors of y.
inline bool check_consistency(const DelayedTree& t, const OrderedGraph& g) {
  for (int y = 0; y < t.size(); ++y) {
    if (t.parent(y) < 0) continue;
    const Interval inner = t.span(y);
    for (int v : detail::outside_neighbors(g, inner, t.span(t.parent(y))))
      if (g.count_neighbors_in(v, inner.lo, inner.hi) != inner.size()) return false;
  }
  return true;
}

struct TreeStats {
  int nodes = 0;
  long long quotient_edges = 0;
  int nonempty_quotients = 0;
  int quotients = 0;  ///< nodes with grandchildren
  int root_children = 0;
  bool leaves_single = true;
  bool siblings_independent = true;
};

inline TreeStats tree_stats(const DelayedTree& t) {
  TreeStats s;
  s.nodes = t.size();
  s.root_children = t.size() > 0 ? t.child_count(t.root()) : 0;
  for (int x = 0; x < t.size(); ++x) {
    const auto& q = t.quotient_edges(x);
    s.quotient_edges += static_cast<long long>(q.size());
    if (!q.empty()) ++s.nonempty_quotients;
    if (!t.grandchildren(x).empty()) ++s.quotients;
    if (t.is_leaf(x) && t.child_count(t.parent(x)) != 1) s.leaves_single = false;
    const auto gc = t.grandchildren(x);
    for (const auto& e : q)
      if (t.parent(gc[e.u]) == t.parent(gc[e.v])) s.siblings_independent = false;
  }
  return s;
}

// Text form:
//   tree <nodes> <leaves>
//   node <id> <parent> <lo> <hi> <label>      (one per node, preorder)
//   quotient <x> <a> <b>                      (grandchild node ids)
inline void write_tree(std::ostream& out, const DelayedTree& t) {
  out << "tree " << t.size() << ' ' << t.leaf_count() << '\n';
  for (int x : t.preorder()) {
    const Interval s = t.span(x);
    out << "node " << x << ' ' << t.parent(x) << ' ' << s.lo << ' ' << s.hi << ' ' << to_string(t.label(x))
        << '\n';
  }
  for (int x : t.preorder()) {
    const auto gc = t.grandchildren(x);
    for (const auto& e : t.quotient_edges(x)) out << "quotient " << x << ' ' << gc[e.u] << ' ' << gc[e.v] << '\n';
  }
}

inline DelayedTree read_tree(std::istream& in) {
  auto fail = [](const std::string& why) -> void { throw Error(ErrorCode::ParseError, "tree: " + why); };
  std::string word;
  int nodes = 0, leaves = 0;
  if (!(in >> word >> nodes >> leaves) || word != "tree" || nodes < 0) fail("bad header");
  std::vector<int> parent(nodes, -2);
  std::vector<Label> labels(nodes, Label::None);
  for (int i = 0; i < nodes; ++i) {
    int id, p, lo, hi;
    std::string lab;
    if (!(in >> word >> id >> p >> lo >> hi >> lab) || word != "node" || id < 0 || id >= nodes) fail("bad node line");
    parent[id] = p;
    labels[id] = label_from_string(lab);
  }
  DelayedTree t = DelayedTree::from_parents(parent);
  if (t.leaf_count() != leaves) fail("leaf count mismatch");
  while (in >> word) {
    int x, a, b;
    if (word != "quotient" || !(in >> x >> a >> b)) fail("bad quotient line");
    t.add_quotient_edge(x, a, b);
  }
  if (std::any_of(labels.begin(), labels.end(), [](Label l) { return l != Label::None; })) t.set_labels(labels);
  return t;
}

/// Graphviz view: nodes show L(x) and the label; quotient edges are dashed.
inline void write_dot(std::ostream& out, const DelayedTree& t) {
  out << "digraph delayed {\n  node [shape=box];\n";
  for (int x : t.preorder()) {
    const Interval s = t.span(x);
    out << "  n" << x << " [label=\"" << x << " [" << s.lo << "," << s.hi << "]";
    if (t.labeled()) out << " " << to_string(t.label(x));
    out << "\"];\n";
    if (t.parent(x) >= 0) out << "  n" << t.parent(x) << " -> n" << x << ";\n";
  }
  for (int x : t.preorder()) {
    const auto gc = t.grandchildren(x);
    for (const auto& e : t.quotient_edges(x))
      out << "  n" << gc[e.u] << " -> n" << gc[e.v] << " [dir=none, style=dashed, constraint=false];\n";
  }
  out << "}\n";
}

}  // namespace kim
