#pragma once

// Verification sweeps that tie the modules together: the parity-balance
// property of bent functions, the spectral sign relations of the lifted
// functions, and the suites behind `bentkit verify`.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bentkit/boolean_function.hpp"
#include "bentkit/construct.hpp"
#include "bentkit/oracle.hpp"
#include "bentkit/restricted.hpp"
#include "bentkit/text_format.hpp"
#include "bentkit/walsh.hpp"

namespace bentkit {

inline constexpr std::uint64_t kDefaultRngSeed = 20240611;

struct VerifyOptions {
  bool sampled = false;       // force sampling even where exhaustive is possible
  std::uint64_t samples = 0;  // 0 selects the suite default
  std::uint64_t rng_seed = kDefaultRngSeed;
  unsigned threads = 1;
};

/// Seed for sample `i` of a run, independent of how samples are split across threads.
inline std::uint64_t sample_seed(std::uint64_t rng_seed, std::uint64_t i) {
  std::uint64_t z = rng_seed + 0x9E3779B97F4A7C15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline BooleanFunction random_function(int n, std::mt19937_64& rng) {
  std::vector<std::uint64_t> w(detail::word_count(n));
  for (auto& word : w) word = rng();
  w.back() &= detail::tail_mask(n);
  return BooleanFunction::from_words(n, std::move(w));
}

/// Bent sample `i`: a seeded Maiorana-McFarland function pushed through a
/// random affine equivalence (input map plus affine offset).
inline BooleanFunction sampled_bent(int n, std::uint64_t rng_seed, std::uint64_t i) {
  std::mt19937_64 rng(sample_seed(rng_seed, i));
  return random_affine_equivalent(seed_bent(n, rng()), rng);
}

namespace detail {

// Runs body(first, last) over [0, count) split into `threads` contiguous
// ranges and returns the per-range results in order.
template <class Result, class Body>
std::vector<Result> split_range(std::uint64_t count, unsigned threads, Body body) {
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(count, 1)));
  std::vector<Result> parts(threads);
  if (threads == 1) {
    parts[0] = body(std::uint64_t{0}, count);
    return parts;
  }
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t)
    workers.emplace_back([&, t] { parts[t] = body(count * t / threads, count * (t + 1) / threads); });
  for (auto& w : workers) w.join();
  return parts;
}

}  // namespace detail

struct ParityBalanceVerification {
  int n = 0;
  bool exhaustive = false;
  ParityBalanceTally tally;
  std::vector<BooleanFunction> population;  // only kept for exhaustive runs
};

/// Every bent f on F_2^n is balanced on the even- or the odd-weight half.
/// Exhaustive over B_n for n <= 4 (unless sampling is forced), sampled otherwise.
inline ParityBalanceVerification verify_parity_balance_theorem(int n, const VerifyOptions& opt = {}) {
  if (n % 2 != 0 || n < 2) throw DomainError("parity balance needs even n >= 2, got n=" + std::to_string(n));
  ParityBalanceVerification out;
  out.n = n;
  if (n <= 4 && !opt.sampled) {
    out.exhaustive = true;
    auto summary = oracle::enumerate_bent(n, opt.threads);
    for (const auto& f : summary.bent_functions) out.tally.add(f);
    out.population = std::move(summary.bent_functions);
    return out;
  }
  if (n > 16) throw DomainError("sampled parity balance supports n <= 16");
  const std::uint64_t samples = opt.samples ? opt.samples : 10000;
  auto parts = detail::split_range<ParityBalanceTally>(samples, opt.threads, [&](std::uint64_t first, std::uint64_t last) {
    ParityBalanceTally t;
    for (std::uint64_t i = first; i < last; ++i) {
      const auto f = sampled_bent(n, opt.rng_seed, i);
      if (!is_bent(f)) throw InternalConsistencyError("sampled function is not bent");
      t.add(f);
    }
    return t;
  });
  for (const auto& p : parts) out.tally.merge(p);
  return out;
}

/// Spectral relations between g and its lifts g_e0 = lift_even(g), g_e1 = lift_odd(g),
/// checked at every a in F_2^m with k = 2^(m/2):
///
///   item 1   W_g(a) = W_e0(a,0) = W_e1(a,0)
///   item 2   g even-balanced:  W_g(a) = k  <=>  W_e0(a,1) = -k and W_e1(a,1) = k
///   item 3   g odd-balanced:   W_g(a) = -k <=>  W_e0(a,1) = k and W_e1(a,1) = -k
///
/// Items 2 and 3 are recorded as stated. They do not hold everywhere: the
/// sign at (a,1) depends on which half g ^ l_a is balanced on, not g. The
/// position law records that version:
///
///   W_e0(a,1) = -W_g(a) if g ^ l_a is even-balanced, +W_g(a) if odd-balanced,
///   W_e1(a,1) = -W_e0(a,1).
struct CorollaryReport {
  int m = 0;
  bool g_even_balanced = false;
  bool g_odd_balanced = false;
  bool lift_even_bent = false;
  bool lift_odd_bent = false;
  std::uint64_t positions = 0;
  std::vector<Point> item1_failures;
  std::vector<Point> item2_failures;
  std::vector<Point> item3_failures;
  std::vector<Point> position_law_failures;

  bool lifts_bent() const { return lift_even_bent && lift_odd_bent; }
  bool stated_items_hold() const {
    return item1_failures.empty() && item2_failures.empty() && item3_failures.empty();
  }
  bool position_law_holds() const { return item1_failures.empty() && position_law_failures.empty(); }
};

inline CorollaryReport verify_spectral_sign_corollary(const BooleanFunction& g) {
  if (!is_bent(g)) throw DomainError("verify_spectral_sign_corollary needs a bent g");
  CorollaryReport r;
  const int m = g.variables();
  r.m = m;
  const auto balance = restricted_balance(g);
  r.g_even_balanced = balance.balanced_even;
  r.g_odd_balanced = balance.balanced_odd;

  const auto e0 = lift_even(g);
  const auto e1 = lift_odd(g);
  r.lift_even_bent = is_restricted_bent(e0);
  r.lift_odd_bent = is_restricted_bent(e1);

  const auto wg = walsh_spectrum(g);
  const auto w0 = restricted_spectrum(e0.values, e0.domain);
  const auto w1 = restricted_spectrum(e1.values, e1.domain);
  const auto g_even = restricted_spectrum(g, AffineSubspace::even_weight(m));
  const std::int64_t k = std::int64_t{1} << (m / 2);
  const Point top = Point{1} << m;

  for (Point a = 0; a < top; ++a) {
    ++r.positions;
    const std::int64_t w = wg[a];
    if (!(w == w0[a] && w0[a] == w1[a])) r.item1_failures.push_back(a);
    const std::int64_t s0 = w0[a | top];
    const std::int64_t s1 = w1[a | top];
    if (r.g_even_balanced && ((w == k) != (s0 == -k && s1 == k))) r.item2_failures.push_back(a);
    if (r.g_odd_balanced && ((w == -k) != (s0 == k && s1 == -k))) r.item3_failures.push_back(a);
    const std::int64_t expected0 = g_even[a] == 0 ? -w : w;
    if (s0 != expected0 || s1 != -s0) r.position_law_failures.push_back(a);
  }
  return r;
}

/// Columns: function-hex, wH, Nl, bent, balanced_even, balanced_odd, zeros_even, zeros_odd.
inline const char* function_csv_header() {
  return "function_hex,wH,Nl,bent,balanced_even,balanced_odd,zeros_even,zeros_odd";
}

inline std::string function_csv_row(const BooleanFunction& f) {
  const auto s = walsh_spectrum(f);
  const auto b = restricted_balance(f);
  std::ostringstream out;
  out << to_hex(f) << ',' << hamming_weight(f) << ',' << nonlinearity_from_spectrum(s) << ',' << is_bent(s) << ','
      << b.balanced_even << ',' << b.balanced_odd << ',' << b.zeros_even << ',' << b.zeros_odd;
  return out.str();
}

/// Outcome of one `verify` suite.
struct SuiteResult {
  std::string suite;
  int n = 0;
  bool exhaustive = false;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> notes;           // summary lines and the first failures
  std::vector<BooleanFunction> population;  // functions covered, for CSV output
};

namespace detail {

inline void note_failure(SuiteResult& r, const std::string& what) {
  ++r.failures;
  if (r.notes.size() < 20) r.notes.push_back("counterexample: " + what);
}

}  // namespace detail

/// FWHT against the definitional sum, entry by entry.
inline SuiteResult run_walsh_suite(int n, const VerifyOptions& opt = {}) {
  if (n < 1 || n > oracle::kMaxNaiveWalshVariables)
    throw DomainError("walsh suite supports 1 <= n <= " + std::to_string(oracle::kMaxNaiveWalshVariables));
  SuiteResult r{"walsh", n, n <= 4 && !opt.sampled, 0, 0, {}, {}};
  auto check = [&](const BooleanFunction& f) {
    const auto fast = walsh_spectrum(f);
    ++r.checked;
    for (Point a = 0; a < f.size(); ++a)
      if (fast[a] != oracle::naive_walsh(f, a)) {
        detail::note_failure(r, to_hex(f) + " at a=" + std::to_string(a));
        return;
      }
  };
  if (r.exhaustive) {
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << point_count(n)); ++t) check(BooleanFunction::from_words(n, {t}));
  } else {
    const std::uint64_t samples = opt.samples ? opt.samples : 100;
    for (std::uint64_t i = 0; i < samples; ++i) {
      std::mt19937_64 rng(sample_seed(opt.rng_seed, i));
      check(random_function(n, rng));
    }
  }
  return r;
}

/// Spectral nonlinearity against the minimum distance to all affine functions.
inline SuiteResult run_nonlinearity_suite(int n, const VerifyOptions& opt = {}) {
  if (n < 1 || n > oracle::kMaxNaiveNonlinearityVariables)
    throw DomainError("nonlinearity suite supports 1 <= n <= " +
                      std::to_string(oracle::kMaxNaiveNonlinearityVariables));
  SuiteResult r{"nonlinearity", n, n <= 4 && !opt.sampled, 0, 0, {}, {}};
  auto check = [&](const BooleanFunction& f) {
    ++r.checked;
    const auto fast = nonlinearity(f);
    const auto slow = oracle::naive_nonlinearity(f);
    if (fast != slow)
      detail::note_failure(r, to_hex(f) + " spectral " + std::to_string(fast) + " vs distance " + std::to_string(slow));
  };
  if (r.exhaustive) {
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << point_count(n)); ++t) check(BooleanFunction::from_words(n, {t}));
  } else {
    const std::uint64_t samples = opt.samples ? opt.samples : 100;
    for (std::uint64_t i = 0; i < samples; ++i) {
      std::mt19937_64 rng(sample_seed(opt.rng_seed, i));
      check(random_function(n, rng));
    }
  }
  return r;
}

inline SuiteResult run_theorem4_suite(int n, const VerifyOptions& opt = {}) {
  auto v = verify_parity_balance_theorem(n, opt);
  SuiteResult r{"theorem4", n, v.exhaustive, v.tally.checked, v.tally.counterexamples.size(), {}, {}};
  r.notes.push_back("even-balanced " + std::to_string(v.tally.even_balanced) + ", odd-balanced " +
                    std::to_string(v.tally.odd_balanced) + ", both " + std::to_string(v.tally.both_balanced));
  for (std::size_t i = 0; i < v.tally.counterexamples.size() && i < 20; ++i)
    r.notes.push_back("counterexample: " + to_hex(v.tally.counterexamples[i]));
  r.population = std::move(v.population);
  return r;
}

/// Literal pseudocode transcriptions against the closed-form constructions.
/// Seeds: all of B_n for n <= 4, seeded samples above. Offsets: all of
/// F_2^(n+2) for n <= 4, `samples` random offsets per seed above.
inline SuiteResult run_algorithms_suite(int n, const VerifyOptions& opt = {}) {
  if (n % 2 != 0 || n < 2 || n > 10) throw DomainError("algorithms suite supports even n in [2, 10]");
  SuiteResult r{"algorithms", n, n <= 4 && !opt.sampled, 0, 0, {}, {}};
  std::vector<BooleanFunction> seeds;
  if (r.exhaustive) {
    seeds = oracle::enumerate_bent(n, opt.threads).bent_functions;
  } else {
    const std::uint64_t count = opt.samples ? opt.samples : 20;
    for (std::uint64_t i = 0; i < count; ++i) seeds.push_back(sampled_bent(n, opt.rng_seed, i));
  }
  std::mt19937_64 rng(opt.rng_seed);
  const std::uint64_t offsets = point_count(n + 2);
  for (const auto& g : seeds) {
    ++r.checked;
    for (const auto& d : oracle::cross_check_algorithm1(g))
      detail::note_failure(r, to_hex(g) + " block " + d.block + " point " + std::to_string(d.point));
    auto check_offset = [&](Point b) {
      ++r.checked;
      for (const auto& d : oracle::cross_check_algorithm2(g, LinearOffset::unpack(n, b)))
        detail::note_failure(r, to_hex(g) + " offset " + std::to_string(b) + " block " + d.block + " point " +
                                    std::to_string(d.point));
    };
    if (r.exhaustive)
      for (Point b = 0; b < offsets; ++b) check_offset(b);
    else
      for (int j = 0; j < 16; ++j) check_offset(static_cast<Point>(rng() % offsets));
  }
  r.population = std::move(seeds);
  return r;
}

}  // namespace bentkit
