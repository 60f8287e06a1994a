#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kim/error.hpp"
#include "kim/graph.hpp"
#include "kim/lca_index.hpp"
#include "kim/witness.hpp"

namespace kim {

/// Node label. `None` is the label of nodes without a grandparent.
enum class Label : std::uint8_t { None, R, L, O, OL, OR };

constexpr std::string_view to_string(Label l) {
  switch (l) {
    case Label::None: return "none";
    case Label::R: return "R";
    case Label::L: return "L";
    case Label::O: return "O";
    case Label::OL: return "OL";
    case Label::OR: return "OR";
  }
  return "?";
}

inline Label label_from_string(std::string_view s) {
  for (Label l : {Label::None, Label::R, Label::L, Label::O, Label::OL, Label::OR})
    if (to_string(l) == s) return l;
  throw Error(ErrorCode::ParseError, "unknown label '" + std::string(s) + "'");
}

/// Rooted ordered tree whose leaves are the vertices 0..n-1 in DFS order,
/// carrying one quotient graph per node on that node's grandchildren.
///
/// Children are ordered by node id, so ids must increase left to right among
/// siblings. Leaves are non-root nodes without children. Quotient edges are
/// stored per node as pairs of grandchild positions (see `qpos`).
class DelayedTree {
 public:
  DelayedTree() = default;

  /// `parent[root] == -1`. Throws NotATree on cycles or several roots.
  static DelayedTree from_parents(std::vector<int> parent) {
    DelayedTree t;
    t.parent_ = std::move(parent);
    t.finish_structure();
    return t;
  }

  int size() const { return static_cast<int>(parent_.size()); }
  int root() const { return root_; }
  int leaf_count() const { return static_cast<int>(leaf_of_.size()); }

  int parent(int x) const { return parent_[x]; }
  int grandparent(int x) const { return parent_[x] < 0 ? -1 : parent_[parent_[x]]; }
  std::span<const int> children(int x) const {
    return {child_flat_.data() + child_off_[x], child_flat_.data() + child_off_[x + 1]};
  }
  int child_count(int x) const { return child_off_[x + 1] - child_off_[x]; }
  std::span<const int> grandchildren(int x) const {
    return {gc_flat_.data() + gc_off_[x], gc_flat_.data() + gc_off_[x + 1]};
  }
  /// Index of x among the grandchildren of its grandparent, or -1.
  int qpos(int x) const { return qpos_[x]; }

  bool is_leaf(int x) const { return x != root_ && child_count(x) == 0; }
  Interval span(int x) const { return span_[x]; }
  int leaf_of(int v) const { return leaf_of_[v]; }
  int vertex_of(int x) const { return vertex_of_[x]; }
  int depth(int x) const { return lca_.depth(x); }
  const LcaIndex& lca() const { return lca_; }
  /// Node ids in preorder.
  const std::vector<int>& preorder() const { return preorder_; }

  const std::vector<Edge>& quotient_edges(int x) const { return qedges_[x]; }
  OrderedGraph quotient_graph(int x) const {
    return OrderedGraph::from_sorted_edges(static_cast<int>(grandchildren(x).size()), qedges_[x]);
  }
  long long total_quotient_edges() const {
    long long s = 0;
    for (const auto& q : qedges_) s += static_cast<long long>(q.size());
    return s;
  }

  /// Adds the quotient edge between grandchildren a and b of x (node ids).
  /// Throws MalformedTree unless a and b are non-sibling grandchildren of x.
  void add_quotient_edge(int x, int a, int b) {
    auto bad = [&](const std::string& why) {
      throw Error(ErrorCode::MalformedTree, "quotient edge " + std::to_string(a) + "-" + std::to_string(b) +
                                                " at node " + std::to_string(x) + ": " + why);
    };
    if (x < 0 || x >= size() || a < 0 || a >= size() || b < 0 || b >= size()) bad("node out of range");
    if (grandparent(a) != x || grandparent(b) != x) bad("not grandchildren of the node");
    if (parent_[a] == parent_[b]) bad("siblings");
    insert_qedge(x, qpos_[a], qpos_[b]);
  }

  /// Same as add_quotient_edge with grandchild positions; no sibling check.
  void insert_qedge(int x, int pa, int pb) {
    Edge e = pa < pb ? Edge{pa, pb} : Edge{pb, pa};
    auto& q = qedges_[x];
    auto it = std::lower_bound(q.begin(), q.end(), e);
    if (it == q.end() || *it != e) q.insert(it, e);
  }

  /// Replaces all quotient edge lists; each must be sorted and unique.
  void set_quotient_edges(std::vector<std::vector<Edge>> q) { qedges_ = std::move(q); }

  bool labeled() const { return labeled_; }
  Label label(int x) const { return labels_[x]; }
  /// Label of the parent; `None` for the root.
  Label type(int x) const { return parent_[x] < 0 ? Label::None : labels_[parent_[x]]; }
  void set_labels(std::vector<Label> labels) {
    labels_ = std::move(labels);
    labeled_ = true;
  }

  /// Structural checks. Throws MalformedTree on the first violation.
  void validate() const {
    auto bad = [](const std::string& why) { throw Error(ErrorCode::MalformedTree, why); };
    for (int x = 0; x < size(); ++x) {
      if (is_leaf(x) && child_count(parent_[x]) != 1)
        bad("leaf " + std::to_string(x) + " has siblings");
      const int slots = static_cast<int>(grandchildren(x).size());
      for (const auto& e : qedges_[x]) {
        if (e.u < 0 || e.v >= slots || e.u >= e.v)
          bad("quotient edge out of range at node " + std::to_string(x));
        const auto gc = grandchildren(x);
        if (parent_[gc[e.u]] == parent_[gc[e.v]])
          bad("quotient edge between siblings at node " + std::to_string(x));
      }
    }
  }

 private:
  void finish_structure() {
    const int N = size();
    for (int x = 0; x < N; ++x) {
      if (parent_[x] < -1 || parent_[x] >= N)
        throw Error(ErrorCode::NotATree, "parent index out of range at node " + std::to_string(x));
    }
    child_off_.assign(N + 1, 0);
    for (int x = 0; x < N; ++x)
      if (parent_[x] >= 0) ++child_off_[parent_[x] + 1];
    for (int x = 0; x < N; ++x) child_off_[x + 1] += child_off_[x];
    child_flat_.resize(child_off_[N]);
    {
      std::vector<int> fill(child_off_.begin(), child_off_.end() - 1);
      for (int x = 0; x < N; ++x)
        if (parent_[x] >= 0) child_flat_[fill[parent_[x]]++] = x;
    }
    lca_ = LcaIndex::from_csr(parent_, child_off_, child_flat_);
    root_ = lca_.root();

    // Preorder, leaves, spans.
    preorder_.clear();
    preorder_.reserve(N);
    span_.assign(N, Interval{0, -1});
    vertex_of_.assign(N, -1);
    leaf_of_.clear();
    if (N > 0) {
      std::vector<int> stack{root_};
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        preorder_.push_back(x);
        if (x != root_ && child_count(x) == 0) {
          vertex_of_[x] = static_cast<int>(leaf_of_.size());
          leaf_of_.push_back(x);
        }
        auto c = children(x);
        for (auto it = c.rbegin(); it != c.rend(); ++it) stack.push_back(*it);
      }
      for (auto it = preorder_.rbegin(); it != preorder_.rend(); ++it) {
        const int x = *it;
        if (vertex_of_[x] >= 0) {
          span_[x] = {vertex_of_[x], vertex_of_[x]};
        } else if (child_count(x) > 0) {
          span_[x] = {span_[children(x).front()].lo, span_[children(x).back()].hi};
        }
      }
    }

    gc_off_.assign(N + 1, 0);
    for (int x = 0; x < N; ++x) {
      int cnt = 0;
      for (int c : children(x)) cnt += child_count(c);
      gc_off_[x + 1] = gc_off_[x] + cnt;
    }
    gc_flat_.resize(gc_off_[N]);
    qpos_.assign(N, -1);
    for (int x = 0; x < N; ++x) {
      int k = gc_off_[x];
      for (int c : children(x))
        for (int g : children(c)) {
          qpos_[g] = k - gc_off_[x];
          gc_flat_[k++] = g;
        }
    }
    qedges_.assign(N, {});
    labels_.assign(N, Label::None);
    labeled_ = false;
  }

  std::vector<int> parent_;
  int root_ = -1;
  std::vector<int> child_off_, child_flat_;
  std::vector<int> gc_off_, gc_flat_;
  std::vector<int> qpos_;
  std::vector<int> preorder_;
  std::vector<Interval> span_;
  std::vector<int> leaf_of_, vertex_of_;
  std::vector<std::vector<Edge>> qedges_;
  std::vector<Label> labels_;
  bool labeled_ = false;
  LcaIndex lca_;
};

}  // namespace kim
