#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kim/error.hpp"
#include "kim/graph.hpp"
#include "kim/witness.hpp"

namespace kim {

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

constexpr Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
constexpr char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }
inline std::string color_name(Color c) { return c == Color::Red ? "RED" : "BLUE"; }

/// Total red/blue colouring of the pairs of the ordered complete graph K_n.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  explicit EdgeColoring(int n, Color fill = Color::Red)
      : n_(n), colors_(pair_count(n), static_cast<std::uint8_t>(fill)) {
    if (n < 0) throw Error(ErrorCode::BadParams, "negative n");
  }

  int n() const { return n_; }

  Color color(int u, int v) const { return static_cast<Color>(colors_[index(u, v)]); }
  void set(int u, int v, Color c) { colors_[index(u, v)] = static_cast<std::uint8_t>(c); }

  /// The ordered graph formed by the pairs of one colour.
  OrderedGraph color_graph(Color c) const {
    std::vector<Edge> edges;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (color(u, v) == c) edges.push_back({u, v});
    return OrderedGraph::from_sorted_edges(n_, std::move(edges));
  }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

  static std::size_t pair_count(int n) {
    return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
  }

 private:
  std::size_t index(int u, int v) const {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_ || u == v)
      throw Error(ErrorCode::OutOfRange,
                  "pair (" + std::to_string(u) + "," + std::to_string(v) + ") in K_" + std::to_string(n_));
    // Row-major upper triangle.
    return static_cast<std::size_t>(u) * (2 * static_cast<std::size_t>(n_) - u - 1) / 2 + (v - u - 1);
  }

  int n_ = 0;
  std::vector<std::uint8_t> colors_;
};

/// verify_witness restricted to the edges of one colour.
inline bool verify_mono_witness(const EdgeColoring& c, Color color, const IntervalWitness& w) {
  check_witness_shape(c.n(), w);
  const int t = w.size();
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      bool found = false;
      for (int u = w.parts[i].lo; u <= w.parts[i].hi && !found; ++u)
        for (int v = w.parts[j].lo; v <= w.parts[j].hi; ++v)
          if (c.color(u, v) == color) {
            found = true;
            break;
          }
      if (!found) return false;
    }
    if (w.loops[i]) {
      bool found = false;
      for (int u = w.parts[i].lo; u <= w.parts[i].hi && !found; ++u)
        for (int v = u + 1; v <= w.parts[i].hi; ++v)
          if (c.color(u, v) == color) {
            found = true;
            break;
          }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace kim
