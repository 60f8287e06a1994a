#pragma once

#include <utility>
#include <span>
#include <string>
#include <vector>

#include "kim/error.hpp"
#include "kim/range_index.hpp"

namespace kim {

/// Answer to an extended LCA query. Absent nodes are -1.
struct ExtendedLca {
  int z = -1;
  int cu = -1;
  int gu = -1;
  int cv = -1;
  int gv = -1;
  friend bool operator==(const ExtendedLca&, const ExtendedLca&) = default;
};

/// Extended LCA over a static rooted ordered tree. Nodes are laid out in
/// preorder. For a proper descendant u of z, the rightmost shallowest node in
/// the preorder range (z, u] is the child of z on the way to u. The LCA of
/// two nodes is the parent of that child for the later of the two.
class LcaIndex {
 public:
  LcaIndex() = default;

  /// `parent[root] == -1`; children are visited in the given order.
  LcaIndex(const std::vector<int>& parent, const std::vector<std::vector<int>>& children) {
    if (children.size() != parent.size())
      throw Error(ErrorCode::NotATree, "children table size differs from parent table");
    build(parent, [&](int v) -> const std::vector<int>& { return children[v]; });
  }

  /// Children of v are flat[offsets[v] .. offsets[v+1]-1].
  static LcaIndex from_csr(const std::vector<int>& parent, const std::vector<int>& offsets,
                           const std::vector<int>& flat) {
    LcaIndex idx;
    idx.build(parent, [&](int v) {
      return std::span<const int>(flat.data() + offsets[v], flat.data() + offsets[v + 1]);
    });
    return idx;
  }

  /// Children ordered by node index.
  static LcaIndex from_parents(const std::vector<int>& parent) {
    const int n = static_cast<int>(parent.size());
    std::vector<std::vector<int>> children(n);
    for (int v = 0; v < n; ++v) {
      const int p = parent[v];
      if (p < -1 || p >= n) throw Error(ErrorCode::NotATree, "parent index out of range at node " + std::to_string(v));
      if (p >= 0) children[p].push_back(v);
    }
    return LcaIndex(parent, children);
  }

  int size() const { return static_cast<int>(depth_.size()); }
  int root() const { return root_; }
  int depth(int v) const { return depth_[v]; }

  bool is_ancestor(int a, int b) const { return pre_[a] <= pre_[b] && pre_[b] < pre_[a] + subtree_[a]; }

  int lca(int u, int v) const {
    if (u == v) return u;
    if (pre_[u] > pre_[v]) std::swap(u, v);
    return parent_[step(pre_[u] + 1, pre_[v])];
  }

  /// Child of `z` that is an ancestor of `u`; `u` must be a proper descendant.
  int child_toward(int z, int u) const { return step(pre_[z] + 1, pre_[u]); }

  ExtendedLca query(int u, int v) const {
    ExtendedLca r;
    if (u == v) {
      r.z = u;
      return r;
    }
    const bool swapped = pre_[u] > pre_[v];
    if (swapped) std::swap(u, v);
    // v comes later in preorder, so it is never an ancestor of u.
    r.cv = step(pre_[u] + 1, pre_[v]);
    r.z = parent_[r.cv];
    if (v != r.cv) r.gv = child_toward(r.cv, v);
    if (u != r.z) {
      r.cu = child_toward(r.z, u);
      if (u != r.cu) r.gu = child_toward(r.cu, u);
    }
    if (swapped) {
      std::swap(r.cu, r.cv);
      std::swap(r.gu, r.gv);
    }
    return r;
  }

 private:
  template <class Children>
  void build(const std::vector<int>& parent, Children children) {
    const int n = static_cast<int>(parent.size());
    if (n == 0) return;
    for (int v = 0; v < n; ++v) {
      if (parent[v] == -1) {
        if (root_ != -1) throw Error(ErrorCode::NotATree, "multiple roots (" + std::to_string(root_) + ", " + std::to_string(v) + ")");
        root_ = v;
      }
      for (int c : children(v))
        if (c < 0 || c >= n || parent[c] != v)
          throw Error(ErrorCode::NotATree, "child list of node " + std::to_string(v) + " disagrees with parents");
    }
    if (root_ == -1) throw Error(ErrorCode::NotATree, "no root");

    parent_ = parent;
    depth_.assign(n, -1);
    pre_.assign(n, -1);
    subtree_.assign(n, 1);
    order_.reserve(n);
    std::vector<int> stack{root_};
    depth_[root_] = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      pre_[v] = static_cast<int>(order_.size());
      order_.push_back(v);
      const auto kids = children(v);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
        const int c = *it;
        if (depth_[c] != -1) throw Error(ErrorCode::NotATree, "node " + std::to_string(c) + " reached twice");
        depth_[c] = depth_[v] + 1;
        stack.push_back(c);
      }
    }
    const int seen = static_cast<int>(order_.size());
    if (seen != n) throw Error(ErrorCode::NotATree, "cycle: " + std::to_string(n - seen) + " nodes unreachable from the root");
    for (int i = n - 1; i > 0; --i) subtree_[parent_[order_[i]]] += subtree_[order_[i]];

    order_depth_.resize(n);
    for (int i = 0; i < n; ++i) order_depth_[i] = depth_[order_[i]];
    select_.build(n, shallower());
  }

  // Rightmost minimum depth.
  struct Shallower {
    const int* d;
    bool operator()(int q, int p) const { return d[q] <= d[p]; }
  };
  Shallower shallower() const { return {order_depth_.data()}; }

  /// Rightmost shallowest node among preorder positions [i, j].
  int step(int i, int j) const { return order_[select_.query(i, j, shallower())]; }

  int root_ = -1;
  std::vector<int> parent_, depth_, pre_, subtree_, order_, order_depth_;
  BlockSelect select_;
};

inline LcaIndex build_lca_index(const std::vector<int>& parent, const std::vector<std::vector<int>>& children) {
  return LcaIndex(parent, children);
}

}  // namespace kim
