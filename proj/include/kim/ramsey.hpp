#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "kim/coloring.hpp"
#include "kim/error.hpp"
#include "kim/generators.hpp"
#include "kim/oracle.hpp"
#include "kim/rng.hpp"
#include "kim/witness.hpp"

namespace kim {

struct MonoSearchResult {
  Color color = Color::Red;
  IntervalWitness witness;
  int rounds = 0;  ///< completed splitting rounds
};

/// floor(sqrt(floor(log2 n))) for n >= 1.
inline int ramsey_scale(int n) {
  int lg = 0;
  while ((2LL << lg) <= n) ++lg;
  int s = 0;
  while ((s + 1) * (s + 1) <= lg) ++s;
  return s;
}

/// The part count mono_kim_search guarantees on K_n.
inline int ramsey_guarantee(int n) { return 1 << std::max(0, ramsey_scale(n) - 1); }

namespace detail {

inline bool has_color_between(const EdgeColoring& c, Color col, const Interval& a, const Interval& b) {
  for (int u = a.lo; u <= a.hi; ++u)
    for (int v = b.lo; v <= b.hi; ++v)
      if (c.color(u, v) == col) return true;
  return false;
}

/// Stretches disjoint ordered intervals into a partition of [0, n-1]: gaps go
/// to the part on their left, the first part starts at 0.
inline std::vector<Interval> cover(int n, std::vector<Interval> parts) {
  parts.front().lo = 0;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) parts[i].hi = parts[i + 1].lo - 1;
  parts.back().hi = n - 1;
  return parts;
}

}  // namespace detail

/// Monochromatic complete interval minor with at least ramsey_guarantee(n)
/// parts. Each round cuts every kept interval into 2^(s-1) floor-sized
/// pieces. If the pieces of one interval pairwise see a red edge they form
/// the red answer. Otherwise the first piece pair with no red edge between
/// them replaces the interval, so kept intervals stay pairwise all-blue.
/// Up to s rounds run, stopping early once an interval is too short to cut.
/// `kept_trace`, when given, receives the kept intervals after every round.
inline MonoSearchResult mono_kim_search(const EdgeColoring& c,
                                        std::vector<std::vector<Interval>>* kept_trace = nullptr) {
  const int n = c.n();
  if (n < 2) throw Error(ErrorCode::BadParams, "mono_kim_search needs n >= 2");
  const int s = ramsey_scale(n);
  const int pieces = 1 << (s - 1);
  const int need = ramsey_guarantee(n);

  auto finish = [&](Color col, std::vector<Interval> parts, int rounds) {
    MonoSearchResult r{col, IntervalWitness::plain(detail::cover(n, std::move(parts))), rounds};
    if (r.witness.size() < need || !verify_mono_witness(c, col, r.witness))
      throw Error(ErrorCode::InternalError, "Ramsey search fell short of " + std::to_string(need) + " parts");
    return r;
  };

  std::vector<Interval> kept{{0, n - 1}};
  int round = 0;
  for (; round < s; ++round) {
    bool splittable = true;
    for (const auto& iv : kept) splittable = splittable && iv.size() >= pieces;
    if (!splittable) break;
    std::vector<Interval> next;
    for (const auto& iv : kept) {
      const int len = iv.size() / pieces;
      std::vector<Interval> sub;
      for (int i = 0; i < pieces; ++i)
        sub.push_back({iv.lo + i * len, i + 1 == pieces ? iv.hi : iv.lo + (i + 1) * len - 1});
      int blue_a = -1, blue_b = -1;
      for (int a = 0; a < pieces && blue_a < 0; ++a)
        for (int b = a + 1; b < pieces && blue_a < 0; ++b)
          if (!detail::has_color_between(c, Color::Red, sub[a], sub[b])) blue_a = a, blue_b = b;
      if (blue_a < 0) return finish(Color::Red, sub, round);
      next.push_back(sub[blue_a]);
      next.push_back(sub[blue_b]);
    }
    kept = std::move(next);
    if (kept_trace) kept_trace->push_back(kept);
  }
  return finish(Color::Blue, kept, round);
}

inline constexpr int kBaseRetries = 1000;
inline constexpr long long kSubstitutionLimit = 4096;

struct SubstitutionColoring {
  EdgeColoring coloring;
  EdgeColoring base;
  int threshold = 0;      ///< forbidden monochromatic clique size in the base
  bool verified = false;  ///< base checked by enumeration (or the check is vacuous)
};

/// ceil(3 log2 q).
inline int base_threshold(int q) { return static_cast<int>(std::ceil(3.0 * std::log2(static_cast<double>(q)) - 1e-9)); }

/// Colouring of K_{q^k}: the pair (u, v) takes the base colour of the q-ary
/// digits of u and v at the most significant position where they differ.
/// The base colouring of K_q is resampled until neither colour has a clique
/// of size ceil(3 log2 q); the check is skipped (verified = false) for q > 16.
inline SubstitutionColoring gen_substitution_coloring(int q, int k, std::uint64_t seed) {
  if (q < 2 || k < 1) throw Error(ErrorCode::BadParams, "need q >= 2 and k >= 1");
  long long total = 1;
  for (int i = 0; i < k; ++i) {
    total *= q;
    if (total > kSubstitutionLimit)
      throw Error(ErrorCode::TooLarge, "q^k exceeds " + std::to_string(kSubstitutionLimit));
  }
  SubstitutionColoring out;
  out.threshold = base_threshold(q);
  Xorshift64Star rng(seed);
  const bool vacuous = out.threshold > q;
  const bool checkable = q <= 16;
  for (int attempt = 0;; ++attempt) {
    if (attempt == kBaseRetries)
      throw Error(ErrorCode::BaseNotFound, "no base colouring after " + std::to_string(kBaseRetries) + " samples");
    out.base = random_coloring(q, rng);
    if (vacuous || !checkable) break;
    auto as_graph = [&](Color col) {
      return Graph::from_sorted_edges(q, out.base.color_graph(col).edges());
    };
    if (exact_max_clique(as_graph(Color::Red)) < out.threshold &&
        exact_max_clique(as_graph(Color::Blue)) < out.threshold)
      break;
  }
  out.verified = vacuous || checkable;

  const int n = static_cast<int>(total);
  out.coloring = EdgeColoring(n);
  std::vector<int> digits_u(k), digits_v(k);
  auto digits = [&](int x, std::vector<int>& d) {
    for (int i = k - 1; i >= 0; --i, x /= q) d[i] = x % q;
  };
  for (int u = 0; u < n; ++u) {
    digits(u, digits_u);
    for (int v = u + 1; v < n; ++v) {
      digits(v, digits_v);
      int i = 0;
      while (digits_u[i] == digits_v[i]) ++i;
      out.coloring.set(u, v, out.base.color(digits_u[i], digits_v[i]));
    }
  }
  return out;
}

}  // namespace kim
