#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "kim/coloring.hpp"
#include "kim/error.hpp"
#include "kim/graph.hpp"
#include "kim/witness.hpp"

// Text formats:
//   graph    : "n m", then m lines "u v" with 0 <= u < v < n
//   witness  : "t", then t lines "lo hi"
//   coloring : "n", then n(n-1)/2 lines "u v c" with c in {R, B}
// Blank lines and lines starting with '#' are ignored.

namespace kim {

namespace detail {

class TokenReader {
 public:
  explicit TokenReader(std::istream& in, std::string what) : in_(in), what_(std::move(what)) {}

  bool next_line(std::istringstream& line) {
    std::string text;
    while (std::getline(in_, text)) {
      ++line_no_;
      auto first = text.find_first_not_of(" \t\r");
      if (first == std::string::npos || text[first] == '#') continue;
      line.clear();
      line.str(text);
      return true;
    }
    return false;
  }

  std::istringstream expect_line() {
    std::istringstream line;
    if (!next_line(line)) fail("unexpected end of input");
    return line;
  }

  template <class T>
  T read(std::istringstream& line, const char* field) {
    T value{};
    if (!(line >> value)) fail(std::string("cannot read ") + field);
    return value;
  }

  void finish_line(std::istringstream& line) {
    std::string extra;
    if (line >> extra) fail("trailing token '" + extra + "'");
  }

  void expect_eof() {
    std::istringstream line;
    if (next_line(line)) fail("unexpected extra line");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, what_ + " line " + std::to_string(line_no_) + ": " + msg);
  }

 private:
  std::istream& in_;
  std::string what_;
  int line_no_ = 0;
};

inline std::ifstream open_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return f;
}

}  // namespace detail

inline OrderedGraph read_graph(std::istream& in) {
  detail::TokenReader r(in, "graph");
  auto header = r.expect_line();
  const long long n = r.read<long long>(header, "n");
  const long long m = r.read<long long>(header, "m");
  r.finish_line(header);
  if (n < 0 || m < 0 || n > (1LL << 30)) r.fail("bad header");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    auto line = r.expect_line();
    const long long u = r.read<long long>(line, "u");
    const long long v = r.read<long long>(line, "v");
    r.finish_line(line);
    if (u >= v) r.fail("edge must satisfy u < v");
    if (u < 0 || v >= n)
      throw Error(ErrorCode::OutOfRange,
                  "(" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  r.expect_eof();
  return OrderedGraph::from_edge_list(static_cast<int>(n), pairs);
}

inline void write_graph(std::ostream& out, const OrderedGraph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline IntervalWitness read_witness(std::istream& in) {
  detail::TokenReader r(in, "witness");
  auto header = r.expect_line();
  const long long t = r.read<long long>(header, "t");
  r.finish_line(header);
  if (t < 0) r.fail("negative part count");
  std::vector<Interval> parts;
  for (long long i = 0; i < t; ++i) {
    auto line = r.expect_line();
    const int lo = r.read<int>(line, "lo");
    const int hi = r.read<int>(line, "hi");
    r.finish_line(line);
    parts.push_back({lo, hi});
  }
  r.expect_eof();
  return IntervalWitness::plain(std::move(parts));
}

inline void write_witness(std::ostream& out, const IntervalWitness& w) {
  out << w.size() << '\n';
  for (const auto& p : w.parts) out << p.lo << ' ' << p.hi << '\n';
}

/// Missing or duplicate pairs are ParseErrors.
inline EdgeColoring read_coloring(std::istream& in) {
  detail::TokenReader r(in, "coloring");
  auto header = r.expect_line();
  const long long n = r.read<long long>(header, "n");
  r.finish_line(header);
  if (n < 0 || n > 65536) r.fail("bad vertex count");
  EdgeColoring c(static_cast<int>(n));
  const auto total = EdgeColoring::pair_count(static_cast<int>(n));
  std::vector<char> seen(total, 0);
  for (std::size_t i = 0; i < total; ++i) {
    auto line = r.expect_line();
    long long u = r.read<long long>(line, "u");
    long long v = r.read<long long>(line, "v");
    const std::string col = r.read<std::string>(line, "c");
    r.finish_line(line);
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n || u == v) r.fail("pair out of range");
    if (col != "R" && col != "B") r.fail("colour must be R or B");
    const auto idx = static_cast<std::size_t>(u) * (2 * static_cast<std::size_t>(n) - u - 1) / 2 +
                     static_cast<std::size_t>(v - u - 1);
    if (seen[idx]) r.fail("duplicate pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
    seen[idx] = 1;
    c.set(static_cast<int>(u), static_cast<int>(v), col == "R" ? Color::Red : Color::Blue);
  }
  r.expect_eof();
  return c;
}

inline void write_coloring(std::ostream& out, const EdgeColoring& c) {
  out << c.n() << '\n';
  for (int u = 0; u < c.n(); ++u)
    for (int v = u + 1; v < c.n(); ++v) out << u << ' ' << v << ' ' << color_char(c.color(u, v)) << '\n';
}

inline OrderedGraph load_graph(const std::string& path) {
  auto f = detail::open_input(path);
  return read_graph(f);
}

inline IntervalWitness load_witness(const std::string& path) {
  auto f = detail::open_input(path);
  return read_witness(f);
}

inline EdgeColoring load_coloring(const std::string& path) {
  auto f = detail::open_input(path);
  return read_coloring(f);
}

}  // namespace kim
