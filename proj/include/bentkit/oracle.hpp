#pragma once

// Brute-force references. Everything here works from the definitions, point
// by point, with its own bit extraction and parity; none of it calls the
// butterflies, the popcount-lane tricks, or the closed-form constructions it
// is used to check.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "bentkit/boolean_function.hpp"
#include "bentkit/construct.hpp"
#include "bentkit/walsh.hpp"

namespace bentkit::oracle {

inline constexpr int kMaxNaiveWalshVariables = 16;
inline constexpr int kMaxNaiveNonlinearityVariables = 12;

namespace detail {

inline unsigned bit_of(const BooleanFunction& f, std::uint64_t x) {
  const auto w = f.words();
  return static_cast<unsigned>((w[x / 64] >> (x % 64)) & 1u);
}

inline unsigned fold_parity(std::uint64_t v) {
  v ^= v >> 32;
  v ^= v >> 16;
  v ^= v >> 8;
  v ^= v >> 4;
  v ^= v >> 2;
  v ^= v >> 1;
  return static_cast<unsigned>(v & 1u);
}

inline int count_bits(std::uint64_t v) {
  int c = 0;
  for (; v; v &= v - 1) ++c;
  return c;
}

inline bool weight_is_even(std::uint64_t v) { return count_bits(v) % 2 == 0; }

inline void require_at_most(const BooleanFunction& f, int limit, const char* who) {
  if (f.variables() > limit)
    throw ResourceError(std::string(who) + " is limited to n <= " + std::to_string(limit) + ", got n=" +
                        std::to_string(f.variables()));
}

inline bool naive_bent(const BooleanFunction& f);

}  // namespace detail

/// Sum over x of (-1)^(f(x) ^ a.x), one term at a time.
inline std::int64_t naive_walsh(const BooleanFunction& f, Point a) {
  detail::require_at_most(f, kMaxNaiveWalshVariables, "naive_walsh");
  const std::uint64_t total = std::uint64_t{1} << f.variables();
  if (a >= total) throw DomainError("spectral position outside F_2^n");
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < total; ++x) sum += (detail::bit_of(f, x) ^ detail::fold_parity(a & x)) ? -1 : 1;
  return sum;
}

/// Minimum Hamming distance to each of the 2^(n+1) affine functions.
inline std::int64_t naive_nonlinearity(const BooleanFunction& f) {
  detail::require_at_most(f, kMaxNaiveNonlinearityVariables, "naive_nonlinearity");
  const std::uint64_t total = std::uint64_t{1} << f.variables();
  std::int64_t best = static_cast<std::int64_t>(total);
  for (std::uint64_t a = 0; a < total; ++a)
    for (unsigned a0 = 0; a0 < 2; ++a0) {
      std::int64_t distance = 0;
      for (std::uint64_t x = 0; x < total; ++x) distance += detail::bit_of(f, x) != (detail::fold_parity(a & x) ^ a0);
      best = std::min(best, distance);
    }
  return best;
}

inline bool detail::naive_bent(const BooleanFunction& f) {
  if (f.variables() % 2 != 0) return false;
  const std::int64_t flat = std::int64_t{1} << (f.variables() / 2);
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << f.variables()); ++a)
    if (std::llabs(naive_walsh(f, static_cast<Point>(a))) != flat) return false;
  return true;
}

/// Population statistics from a full scan of B_n.
struct EnumerationSummary {
  int n = 0;
  std::uint64_t total_functions = 0;
  std::uint64_t bent_count = 0;
  std::uint64_t even_balanced_count = 0;  // bent functions balanced on even weights (including both)
  std::uint64_t odd_balanced_count = 0;
  std::uint64_t both_balanced_count = 0;
  std::vector<BooleanFunction> counterexamples;  // bent but balanced on neither class
  std::map<std::uint64_t, std::uint64_t> bent_weights;          // w_H -> count
  std::map<std::int64_t, std::uint64_t> bent_nonlinearities;    // naive Nl -> count
  std::uint64_t fast_path_mismatches = 0;  // is_bent disagreed with the definitional check
  std::vector<BooleanFunction> bent_functions;  // in truth-table order

  void merge(const EnumerationSummary& other) {
    total_functions += other.total_functions;
    bent_count += other.bent_count;
    even_balanced_count += other.even_balanced_count;
    odd_balanced_count += other.odd_balanced_count;
    both_balanced_count += other.both_balanced_count;
    counterexamples.insert(counterexamples.end(), other.counterexamples.begin(), other.counterexamples.end());
    for (const auto& [k, v] : other.bent_weights) bent_weights[k] += v;
    for (const auto& [k, v] : other.bent_nonlinearities) bent_nonlinearities[k] += v;
    fast_path_mismatches += other.fast_path_mismatches;
    bent_functions.insert(bent_functions.end(), other.bent_functions.begin(), other.bent_functions.end());
  }
};

namespace detail {

inline EnumerationSummary scan_range(int n, std::uint64_t first, std::uint64_t last) {
  EnumerationSummary s;
  s.n = n;
  const std::uint64_t points = std::uint64_t{1} << n;
  for (std::uint64_t table = first; table < last; ++table) {
    const auto f = BooleanFunction::from_words(n, {table});
    ++s.total_functions;
    const bool bent = naive_bent(f);
    if (bent != is_bent(f)) ++s.fast_path_mismatches;
    if (!bent) continue;
    ++s.bent_count;
    s.bent_functions.push_back(f);
    ++s.bent_weights[static_cast<std::uint64_t>(count_bits(table))];
    ++s.bent_nonlinearities[naive_nonlinearity(f)];
    std::uint64_t ones[2] = {0, 0};
    for (std::uint64_t x = 0; x < points; ++x) ones[fold_parity(x)] += bit_of(f, x);
    const std::uint64_t half = points / 2;
    const bool even = 2 * ones[0] == half;
    const bool odd = 2 * ones[1] == half;
    s.even_balanced_count += even;
    s.odd_balanced_count += odd;
    s.both_balanced_count += even && odd;
    if (!even && !odd) s.counterexamples.push_back(f);
  }
  return s;
}

}  // namespace detail

/// Scans all 2^(2^n) truth tables for n in {2, 4}. Disjoint index ranges are
/// scanned on `threads` workers and merged in order.
inline EnumerationSummary enumerate_bent(int n, unsigned threads = 1) {
  if (n != 2 && n != 4) throw DomainError("exhaustive enumeration supports n = 2 or 4, got n=" + std::to_string(n));
  const std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << n);
  threads = std::clamp<unsigned>(threads, 1, 64);
  std::vector<EnumerationSummary> parts(threads);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t first = total * t / threads;
    const std::uint64_t last = total * (t + 1) / threads;
    if (threads == 1)
      parts[t] = detail::scan_range(n, first, last);
    else
      workers.emplace_back([&parts, t, n, first, last] { parts[t] = detail::scan_range(n, first, last); });
  }
  for (auto& w : workers) w.join();
  EnumerationSummary out;
  out.n = n;
  for (const auto& p : parts) out.merge(p);
  return out;
}

/// Pseudocode form of repeated `extend`, one extension per loop pass,
/// branch for branch: for each (x, y), g_new+2(x, ybar, y) is 1 ^ g_new(ybar) when
/// (ybar even, x=1, y=1) or (ybar odd, x=1, y=0), else g_new(ybar).
inline BooleanFunction literal_algorithm1(const BooleanFunction& g, int end) {
  detail::require_at_most(g, kMaxNaiveNonlinearityVariables, "literal_algorithm1");
  if (!detail::naive_bent(g)) throw PreconditionError("literal_algorithm1: input is not bent");
  if (end <= g.variables() || (end - g.variables()) % 2 != 0 || end > kMaxVariables)
    throw DomainError("literal_algorithm1: unreachable end dimension " + std::to_string(end));
  BooleanFunction current = g;
  int now = g.variables();
  while (now != end) {
    const std::uint64_t inner = std::uint64_t{1} << now;
    std::vector<int> next(std::size_t{1} << (now + 2), 0);
    for (unsigned x = 0; x <= 1; ++x)
      for (unsigned y = 0; y <= 1; ++y)
        for (std::uint64_t ybar = 0; ybar < inner; ++ybar) {
          const bool ybar_even = detail::weight_is_even(ybar);
          const bool flip = (ybar_even && x == 1 && y == 1) || (!ybar_even && x == 1 && y == 0);
          const std::uint64_t index = x | (ybar << 1) | (std::uint64_t{y} << (now + 1));
          next[index] = static_cast<int>(detail::bit_of(current, ybar) ^ (flip ? 1u : 0u));
        }
    now += 2;
    current = BooleanFunction::from_bits(now, next);
  }
  return current;
}

inline BooleanFunction literal_algorithm1(const BooleanFunction& g) { return literal_algorithm1(g, g.variables() + 2); }

/// Label of the offset pseudocode's branch block selected by (a_0, a_s).
inline std::string algorithm2_block(const LinearOffset& off) {
  return std::string("a0=") + (off.a0 ? "1" : "0") + ",a=" + (off.a_s ? "1" : "0");
}

/// Pseudocode form of `extend_with_offset`, one step: the four (a_0, a) branch blocks with a_bar folded
/// into the base value (g ^ l_abar)(xbar).
inline BooleanFunction literal_algorithm2(const BooleanFunction& g, const LinearOffset& off) {
  detail::require_at_most(g, kMaxNaiveNonlinearityVariables, "literal_algorithm2");
  if (off.m != g.variables()) throw DomainError("literal_algorithm2: offset dimension mismatch");
  if (!detail::naive_bent(g)) throw PreconditionError("literal_algorithm2: input is not bent");
  const int now = g.variables();
  const std::uint64_t inner = std::uint64_t{1} << now;
  std::vector<int> next(std::size_t{1} << (now + 2), 0);
  for (unsigned x = 0; x <= 1; ++x)
    for (unsigned y = 0; y <= 1; ++y)
      for (std::uint64_t xbar = 0; xbar < inner; ++xbar) {
        const bool even = detail::weight_is_even(xbar);
        const bool odd = !even;
        bool flip = false;
        if (!off.a0 && !off.a_s) {
          flip = (even && x == 1 && y == 1) || (odd && x == 1 && y == 0);
        }
        if (!off.a0 && off.a_s) {
          flip = (even && x == 0 && y == 1) ||
                 (odd && ((x == 0 && y == 1) || (x == 1 && y == 0) || (x == 1 && y == 1)));
        }
        if (off.a0 && !off.a_s) {
          flip = (even && x == 1 && y == 0) || (odd && x == 1 && y == 1);
        }
        if (off.a0 && off.a_s) {
          flip = (even && ((x == 0 && y == 1) || (x == 1 && y == 0) || (x == 1 && y == 1))) ||
                 (odd && x == 0 && y == 1);
        }
        const unsigned base = detail::bit_of(g, xbar) ^ detail::fold_parity(off.a_bar & xbar);
        const std::uint64_t index = x | (xbar << 1) | (std::uint64_t{y} << (now + 1));
        next[index] = static_cast<int>(base ^ (flip ? 1u : 0u));
      }
  return BooleanFunction::from_bits(now + 2, next);
}

struct Discrepancy {
  std::string block;
  Point point = 0;
};

/// Points where the transcription and the closed form disagree.
inline std::vector<Discrepancy> cross_check_algorithm1(const BooleanFunction& g) {
  const auto literal = literal_algorithm1(g);
  const auto closed = extend(g);
  std::vector<Discrepancy> out;
  for (std::uint64_t z = 0; z < literal.size(); ++z)
    if (detail::bit_of(literal, z) != detail::bit_of(closed, z)) out.push_back({"algorithm1", static_cast<Point>(z)});
  return out;
}

inline std::vector<Discrepancy> cross_check_algorithm2(const BooleanFunction& g, const LinearOffset& off) {
  const auto literal = literal_algorithm2(g, off);
  const auto closed = extend_with_offset(g, off);
  std::vector<Discrepancy> out;
  for (std::uint64_t z = 0; z < literal.size(); ++z)
    if (detail::bit_of(literal, z) != detail::bit_of(closed, z))
      out.push_back({algorithm2_block(off), static_cast<Point>(z)});
  return out;
}

}  // namespace bentkit::oracle
