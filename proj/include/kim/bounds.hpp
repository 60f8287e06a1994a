#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <string>

#include "kim/error.hpp"

namespace kim {

using BigInt = boost::multiprecision::cpp_int;

/// a + b * log2(512 t), kept as exact integer coefficients.
struct GValue {
  BigInt a;
  BigInt b;

  friend bool operator==(const GValue&, const GValue&) = default;

  double numeric(int t) const {
    return a.convert_to<double>() + b.convert_to<double>() * std::log2(512.0 * t);
  }
  std::string str() const { return a.str() + " + " + b.str() + "*log2(512t)"; }
};

inline GValue operator*(long k, const GValue& g) { return {k * g.a, k * g.b}; }
inline GValue operator+(const GValue& x, const GValue& y) { return {x.a + y.a, x.b + y.b}; }

/// g_t(r) with a = 4^(3t-2-r) and b = (a - 1) / 3, for t >= 1 and 0 <= r <= 3t-2.
inline GValue g_value(int t, int r) {
  if (t < 1 || r < 0 || r > 3 * t - 2)
    throw Error(ErrorCode::OutOfDomain, "g(" + std::to_string(t) + ", " + std::to_string(r) + ")");
  const BigInt a = BigInt(1) << (2 * (3 * t - 2 - r));
  return {a, (a - 1) / 3};
}

/// Checks 4 g(t, r) + log2(512t) == g(t, r-1) exactly for r in [1, 3t-2],
/// g(t, r) >= 1, and strict decrease in r when t >= 2. `g` has the signature
/// of g_value so tampered variants can be tested.
template <class G>
bool check_recurrence(int t, G&& g) {
  const GValue one_log{0, 1};
  for (int r = 1; r <= 3 * t - 2; ++r) {
    const GValue cur = g(t, r);
    const GValue prev = g(t, r - 1);
    if (!(4L * cur + one_log == prev)) return false;
    if (cur.numeric(t) < 1.0) return false;
    if (t >= 2 && !(prev.numeric(t) > cur.numeric(t))) return false;
  }
  return g(t, 0).numeric(t) >= 1.0;
}

inline bool check_recurrence(int t) { return check_recurrence(t, g_value); }

/// log2 log2 f(t), i.e. g_t(0) evaluated.
inline double loglog_f(int t) { return g_value(t, 0).numeric(t); }

}  // namespace kim
