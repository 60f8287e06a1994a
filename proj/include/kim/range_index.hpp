#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace kim {

/// Linear-space range selection over positions 0..n-1. `beats(q, p)` for
/// p < q says whether q is preferred to p; it must come from a total preorder
/// on keys (for example "strictly smaller" picks the leftmost minimum and
/// "smaller or equal" the rightmost one).
///
/// Blocks of 64 positions keep a bitmask of the monotone stack at every
/// position, which answers in-block queries with one count-trailing-zeros.
/// A sparse table over block winners covers whole blocks.
class BlockSelect {
 public:
  template <class Beats>
  void build(int n, Beats beats) {
    n_ = n;
    masks_.assign(n, 0);
    const int blocks = (n + kBlock - 1) / kBlock;
    std::vector<int> winners(blocks);
    for (int b = 0; b < blocks; ++b) {
      const int lo = b * kBlock, hi = std::min(n, lo + kBlock);
      std::uint64_t stack = 0;
      for (int i = lo; i < hi; ++i) {
        while (stack && beats(i, lo + top(stack))) stack &= ~(std::uint64_t{1} << top(stack));
        stack |= std::uint64_t{1} << (i - lo);
        masks_[i] = stack;
      }
      winners[b] = lo + std::countr_zero(masks_[hi - 1]);
    }
    levels_ = blocks ? std::bit_width(static_cast<unsigned>(blocks)) : 0;
    table_.assign(static_cast<std::size_t>(levels_) * blocks, 0);
    std::copy(winners.begin(), winners.end(), table_.begin());
    for (int k = 1; k < levels_; ++k) {
      const int half = 1 << (k - 1);
      const int* prev = row(k - 1, blocks);
      int* cur = table_.data() + static_cast<std::size_t>(k) * blocks;
      for (int i = 0; i + (1 << k) <= blocks; ++i) cur[i] = pick(prev[i], prev[i + half], beats);
    }
    blocks_ = blocks;
  }

  /// Preferred position in [i, j]; requires 0 <= i <= j < n.
  template <class Beats>
  int query(int i, int j, Beats beats) const {
    const int bi = i / kBlock, bj = j / kBlock;
    if (bi == bj) return in_block(i, j);
    int best = in_block(i, bi * kBlock + kBlock - 1);
    if (bi + 1 <= bj - 1) {
      const int k = std::bit_width(static_cast<unsigned>(bj - bi - 1)) - 1;
      const int* r = row(k, blocks_);
      best = pick(best, r[bi + 1], beats);
      best = pick(best, r[bj - (1 << k)], beats);
    }
    return pick(best, in_block(bj * kBlock, j), beats);
  }

 private:
  static constexpr int kBlock = 64;

  static int top(std::uint64_t stack) { return 63 - std::countl_zero(stack); }

  template <class Beats>
  static int pick(int p, int q, Beats& beats) {
    if (p == q) return p;
    if (p > q) std::swap(p, q);
    return beats(q, p) ? q : p;
  }

  int in_block(int i, int j) const {
    const int lo = i / kBlock * kBlock;
    return lo + std::countr_zero(masks_[j] & (~std::uint64_t{0} << (i - lo)));
  }

  const int* row(int k, int blocks) const { return table_.data() + static_cast<std::size_t>(k) * blocks; }

  int n_ = 0;
  int blocks_ = 0;
  int levels_ = 0;
  std::vector<std::uint64_t> masks_;
  std::vector<int> table_;
};

struct RangeAnswer {
  int value = 0;
  int pos = -1;
  friend bool operator==(const RangeAnswer&, const RangeAnswer&) = default;
};

/// Static range minimum/maximum over an integer array with O(1) queries.
/// Ties resolve to the leftmost position.
class RangeIndex {
 public:
  RangeIndex() = default;
  explicit RangeIndex(std::vector<int> a) : a_(std::move(a)) {
    const int n = size();
    mins_.build(n, smaller());
    maxs_.build(n, larger());
  }

  int size() const { return static_cast<int>(a_.size()); }
  const std::vector<int>& values() const { return a_; }

  /// Minimum over the inclusive range [i, j]; requires 0 <= i <= j < size().
  RangeAnswer min(int i, int j) const {
    const int p = mins_.query(i, j, smaller());
    return {a_[p], p};
  }

  RangeAnswer max(int i, int j) const {
    const int p = maxs_.query(i, j, larger());
    return {a_[p], p};
  }

 private:
  struct Smaller {
    const int* a;
    bool operator()(int q, int p) const { return a[q] < a[p]; }
  };
  struct Larger {
    const int* a;
    bool operator()(int q, int p) const { return a[q] > a[p]; }
  };
  Smaller smaller() const { return {a_.data()}; }
  Larger larger() const { return {a_.data()}; }

  std::vector<int> a_;
  BlockSelect mins_;
  BlockSelect maxs_;
};

inline RangeIndex build_range_index(std::vector<int> a) { return RangeIndex(std::move(a)); }

}  // namespace kim
