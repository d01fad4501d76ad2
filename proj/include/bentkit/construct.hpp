#pragma once

// Parity-based extended Maiorana-McFarland construction (r = 1).
//
// Layout of an extension step from g on F_2^m to f on F_2^(m+2): the new
// variable x is bit 0, the old variables y_1..y_m move up to bits 1..m and
// the new variable y_s sits at bit m+1. With that layout
//
//     f(x, y, y_s) = x * (y_1 ^ ... ^ y_m ^ y_s) ^ g(y)
//
// and a linear offset b = (a_0, a_bar, a_s) is simply the mask over f's index.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "bentkit/boolean_function.hpp"
#include "bentkit/restricted.hpp"
#include "bentkit/walsh.hpp"

namespace bentkit {

/// b = (a_0, a_bar, a_s) for an extension step from F_2^m.
struct LinearOffset {
  int m = 0;  // length of a_bar, the seed's variable count
  bool a0 = false;
  Point a_bar = 0;
  bool a_s = false;

  /// Mask over F_2^(m+2) in (x, y_1..y_m, y_s) order.
  Point packed() const {
    return static_cast<Point>(a0) | (a_bar << 1) | (static_cast<Point>(a_s) << (m + 1));
  }

  static LinearOffset unpack(int m, Point b) {
    if (m < 1 || m + 2 > kMaxVariables) throw DomainError("offset dimension out of range");
    if (b >= point_count(m + 2))
      throw DomainError("offset " + std::to_string(b) + " has bits beyond F_2^" + std::to_string(m + 2));
    return {m, (b & 1u) != 0, (b >> 1) & static_cast<Point>(point_count(m) - 1), ((b >> (m + 1)) & 1u) != 0};
  }

  friend bool operator==(const LinearOffset&, const LinearOffset&) = default;
};

/// Weight class on which extend(g) ^ l_b is balanced. The y_s coefficient
/// matters as much as a_0: on the even class y_s = x ^ parity(y), so the
/// x-dependence of f ^ l_b there is (1 ^ a_0 ^ a_s) * x.
inline WeightClass balanced_class_for(const LinearOffset& off) {
  return (off.a0 != off.a_s) ? WeightClass::odd : WeightClass::even;
}

namespace detail {

inline RestrictedFunction lift(const BooleanFunction& g, WeightClass cls) {
  const int m = g.variables();
  const int s = m + 1;
  if (s > kMaxVariables) throw DomainError("lift would exceed the variable cap");
  const unsigned coset = cls == WeightClass::odd ? 1u : 0u;
  const Point low = static_cast<Point>(point_count(m) - 1);
  auto values = BooleanFunction::from_rule(s, [&](Point z) {
    const Point y = z & low;
    const unsigned last = z >> m;
    return last == (parity(y) ^ coset) && g[y];
  });
  return {std::move(values), AffineSubspace::of(cls, s)};
}

}  // namespace detail

/// g_e0 on C_0 in F_2^(m+1): (x | x_s) -> g(x), x_s the even parity completion.
inline RestrictedFunction lift_even(const BooleanFunction& g) { return detail::lift(g, WeightClass::even); }

/// g_e1 on C_1 in F_2^(m+1): x_s completes x to odd weight.
inline RestrictedFunction lift_odd(const BooleanFunction& g) { return detail::lift(g, WeightClass::odd); }

/// x * parity(y, y_s) ^ g(y) on F_2^(m+2). Requires bent g.
inline BooleanFunction extend(const BooleanFunction& g) {
  require_bent(g, "extend");
  const int m = g.variables();
  if (m + 2 > kMaxVariables) throw DomainError("extension would exceed the variable cap");
  const Point low = static_cast<Point>(point_count(m) - 1);
  return BooleanFunction::from_rule(m + 2, [&](Point z) {
    const Point y = (z >> 1) & low;
    const unsigned y_s = z >> (m + 1);
    const unsigned x = z & 1u;
    return ((x & (parity(y) ^ y_s)) ^ static_cast<unsigned>(g[y])) != 0;
  });
}

/// extend(g) ^ l_b.
inline BooleanFunction extend_with_offset(const BooleanFunction& g, const LinearOffset& off) {
  if (off.m != g.variables())
    throw DomainError("offset built for F_2^" + std::to_string(off.m) + " but seed lives on F_2^" +
                      std::to_string(g.variables()));
  if (off.a_bar >= point_count(off.m)) throw DomainError("a_bar has bits beyond F_2^m");
  const auto f = extend(g);
  return add_affine(f, {f.variables(), off.packed(), false});
}

struct ConstructionStep {
  std::optional<LinearOffset> offset;
  int n = 0;
  bool bent = false;
  std::int64_t nonlinearity = 0;
  RestrictedBalanceReport balance;
};

struct ConstructionTrace {
  BooleanFunction seed;
  std::vector<ConstructionStep> steps;
  BooleanFunction final_function;
};

/// Repeated extension from `seed` up to `target_n` variables, one offset per
/// step when `offsets` is given. Every intermediate is re-verified as bent.
inline ConstructionTrace build_chain(const BooleanFunction& seed, int target_n,
                                     std::optional<std::span<const LinearOffset>> offsets = std::nullopt) {
  require_bent(seed, "build_chain");
  const int n0 = seed.variables();
  if (target_n % 2 != 0 || target_n <= n0 || target_n > kMaxVariables)
    throw DomainError("target dimension " + std::to_string(target_n) + " must be even, above " +
                      std::to_string(n0) + " and at most " + std::to_string(kMaxVariables));
  const auto step_count = static_cast<std::size_t>((target_n - n0) / 2);
  if (offsets && offsets->size() != step_count)
    throw DomainError("got " + std::to_string(offsets->size()) + " offsets for " + std::to_string(step_count) +
                      " extension steps");

  ConstructionTrace trace{seed, {}, seed};
  for (std::size_t k = 0; k < step_count; ++k) {
    const auto& current = trace.final_function;
    std::optional<LinearOffset> off;
    if (offsets) {
      off = (*offsets)[k];
      if (off->m != current.variables())
        throw DomainError("offset " + std::to_string(k) + " is sized for F_2^" + std::to_string(off->m) +
                          ", step input lives on F_2^" + std::to_string(current.variables()));
    }
    BooleanFunction next = off ? extend_with_offset(current, *off) : extend(current);
    const auto spectrum = walsh_spectrum(next);
    ConstructionStep step{off, next.variables(), is_bent(spectrum), nonlinearity_from_spectrum(spectrum),
                          restricted_balance(next)};
    if (!step.bent)
      throw InternalConsistencyError("extension step " + std::to_string(k) + " produced a non-bent function on F_2^" +
                                     std::to_string(step.n));
    trace.steps.push_back(step);
    trace.final_function = std::move(next);
  }
  return trace;
}

/// x . perm(y) ^ h(y) with x the low k bits and y the high k bits of the index.
inline BooleanFunction maiorana_mcfarland(int k, std::span<const Point> perm, const BooleanFunction& h) {
  if (k < 1 || 2 * k > kMaxVariables) throw DomainError("half dimension out of range");
  if (perm.size() != point_count(k) || h.variables() != k)
    throw DomainError("permutation and h must both be indexed by F_2^" + std::to_string(k));
  std::vector<char> seen(perm.size(), 0);
  for (Point p : perm) {
    if (p >= perm.size() || seen[p]) throw DomainError("perm is not a permutation of F_2^k");
    seen[p] = 1;
  }
  const Point low = static_cast<Point>(point_count(k) - 1);
  return BooleanFunction::from_rule(2 * k, [&](Point z) {
    const Point x = z & low;
    const Point y = z >> k;
    return (dot(x, perm[y]) ^ static_cast<unsigned>(h[y])) != 0;
  });
}

/// Random bent function from the Maiorana-McFarland family; deterministic in `rng_seed`.
inline BooleanFunction seed_bent(int n, std::uint64_t rng_seed) {
  if (n % 2 != 0 || n < 2 || n > 16) throw DomainError("seed_bent needs even n in [2, 16], got " + std::to_string(n));
  const int k = n / 2;
  std::mt19937_64 rng(rng_seed);
  std::vector<Point> perm(point_count(k));
  std::iota(perm.begin(), perm.end(), Point{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  const auto h = BooleanFunction::from_rule(k, [&](Point) { return (rng() & 1u) != 0; });
  auto f = maiorana_mcfarland(k, perm, h);
  if (!is_bent(f)) throw InternalConsistencyError("Maiorana-McFarland output failed the bent check");
  return f;
}

/// f(Mx ^ c) ^ a.x ^ a0 for a uniformly drawn invertible M, shift c and affine
/// term. Bentness is invariant under this map.
inline BooleanFunction random_affine_equivalent(const BooleanFunction& f, std::mt19937_64& rng) {
  const int n = f.variables();
  const Point mask = static_cast<Point>(point_count(n) - 1);
  std::vector<Point> columns;
  while (static_cast<int>(columns.size()) < n) {
    columns.clear();
    std::vector<Point> reduced;  // XOR basis keyed by leading bit
    for (int j = 0; j < n; ++j) {
      Point v = static_cast<Point>(rng()) & mask;
      Point r = v;
      for (Point e : reduced)
        if (r & std::bit_floor(e)) r ^= e;
      if (r == 0) break;
      reduced.push_back(r);
      std::sort(reduced.begin(), reduced.end(), std::greater<>());
      columns.push_back(v);
    }
  }
  const Point shift = static_cast<Point>(rng()) & mask;
  const Point a = static_cast<Point>(rng()) & mask;
  const unsigned a0 = rng() & 1u;
  return BooleanFunction::from_rule(n, [&](Point x) {
    Point image = shift;
    for (int j = 0; j < n; ++j)
      if ((x >> j) & 1u) image ^= columns[j];
    return (static_cast<unsigned>(f[image]) ^ dot(a, x) ^ a0) != 0;
  });
}

}  // namespace bentkit
