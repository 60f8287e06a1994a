#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kim/error.hpp"
#include "kim/graph.hpp"

namespace kim {

/// Inclusive vertex range [lo, hi].
struct Interval {
  int lo = 0;
  int hi = -1;

  int size() const { return hi - lo + 1; }
  bool empty() const { return hi < lo; }
  bool contains(int v) const { return lo <= v && v <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool intersects(const Interval& o) const { return !(o.hi < lo || hi < o.lo); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Which parts of a complete pattern must carry an internal edge.
enum class Variant { Plain, Looped, LeftLazy, RightLazy, Lazy };

constexpr std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Plain: return "plain";
    case Variant::Looped: return "looped";
    case Variant::LeftLazy: return "left-lazy";
    case Variant::RightLazy: return "right-lazy";
    case Variant::Lazy: return "lazy";
  }
  return "?";
}

/// Loop flags implied by a variant for a pattern with `t` parts.
inline std::vector<bool> loop_flags_for(Variant v, int t) {
  std::vector<bool> flags(t, v != Variant::Plain);
  if (t == 0) return flags;
  if (v == Variant::LeftLazy || v == Variant::Lazy) flags.front() = false;
  if (v == Variant::RightLazy || v == Variant::Lazy) flags.back() = false;
  return flags;
}

/// Ordered partition of 0..n-1 into consecutive nonempty intervals, the
/// certificate format for (looped) complete interval minors.
struct IntervalWitness {
  std::vector<Interval> parts;
  std::vector<bool> loops;
  Variant variant = Variant::Plain;

  int size() const { return static_cast<int>(parts.size()); }

  static IntervalWitness plain(std::vector<Interval> parts) {
    IntervalWitness w;
    w.loops.assign(parts.size(), false);
    w.parts = std::move(parts);
    return w;
  }

  static IntervalWitness with_variant(std::vector<Interval> parts, Variant v) {
    IntervalWitness w;
    w.loops = loop_flags_for(v, static_cast<int>(parts.size()));
    w.parts = std::move(parts);
    w.variant = v;
    return w;
  }

  /// Parts from the sorted list of last vertices of all parts but the final one.
  static IntervalWitness from_cuts(int n, const std::vector<int>& cuts) {
    std::vector<Interval> parts;
    int lo = 0;
    for (int c : cuts) {
      parts.push_back({lo, c});
      lo = c + 1;
    }
    parts.push_back({lo, n - 1});
    return plain(std::move(parts));
  }

  friend bool operator==(const IntervalWitness&, const IntervalWitness&) = default;
};

/// Throws ShapeMismatch unless the parts tile 0..n-1 with nonempty intervals
/// and the loop flags agree with the variant.
inline void check_witness_shape(int n, const IntervalWitness& w) {
  if (w.parts.size() != w.loops.size())
    throw Error(ErrorCode::ShapeMismatch, "loop flag count differs from part count");
  if (w.parts.empty()) {
    if (n != 0) throw Error(ErrorCode::ShapeMismatch, "no parts for a nonempty graph");
    return;
  }
  int expect = 0;
  for (std::size_t i = 0; i < w.parts.size(); ++i) {
    const auto& p = w.parts[i];
    if (p.lo != expect || p.empty())
      throw Error(ErrorCode::ShapeMismatch,
                  "part " + std::to_string(i) + " [" + std::to_string(p.lo) + "," +
                      std::to_string(p.hi) + "] does not continue the tiling at " +
                      std::to_string(expect));
    expect = p.hi + 1;
  }
  if (expect != n)
    throw Error(ErrorCode::ShapeMismatch,
                "parts end at " + std::to_string(expect - 1) + ", graph has n=" + std::to_string(n));
  if (w.loops != loop_flags_for(w.variant, w.size()))
    throw Error(ErrorCode::ShapeMismatch,
                "loop flags inconsistent with variant " + std::string(to_string(w.variant)));
}

/// True iff every pair of parts is joined by an edge of g and every
/// loop-flagged part contains an internal edge. Throws ShapeMismatch when the
/// parts do not tile 0..n-1.
inline bool verify_witness(const OrderedGraph& g, const IntervalWitness& w) {
  check_witness_shape(g.n(), w);
  const int t = w.size();
  if (t == 0) return true;
  std::vector<int> part_of(g.n());
  for (int i = 0; i < t; ++i)
    for (int v = w.parts[i].lo; v <= w.parts[i].hi; ++v) part_of[v] = i;
  std::vector<char> joined(static_cast<std::size_t>(t) * t, 0);
  for (const auto& e : g.edges()) {
    const int a = part_of[e.u];
    const int b = part_of[e.v];
    joined[static_cast<std::size_t>(a) * t + b] = 1;
  }
  for (int i = 0; i < t; ++i) {
    if (w.loops[i] && !joined[static_cast<std::size_t>(i) * t + i]) return false;
    for (int j = i + 1; j < t; ++j)
      if (!joined[static_cast<std::size_t>(i) * t + j]) return false;
  }
  return true;
}

/// Merges parts i and i+1 of a plain witness.
inline IntervalWitness merge_parts(const IntervalWitness& w, int i) {
  std::vector<Interval> parts = w.parts;
  parts[i].hi = parts[i + 1].hi;
  parts.erase(parts.begin() + i + 1);
  return IntervalWitness::plain(std::move(parts));
}

/// Drops loop flags and merges trailing parts until exactly `t` remain.
inline IntervalWitness to_plain(const IntervalWitness& w, int t) {
  std::vector<Interval> parts = w.parts;
  while (static_cast<int>(parts.size()) > t && parts.size() >= 2) {
    parts[parts.size() - 2].hi = parts.back().hi;
    parts.pop_back();
  }
  return IntervalWitness::plain(std::move(parts));
}

}  // namespace kim
