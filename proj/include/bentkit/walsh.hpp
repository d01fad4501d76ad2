#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bentkit/boolean_function.hpp"

namespace bentkit {

/// values[a] = sum over x of (-1)^(f(x) ^ a.x). Entries lie in [-2^n, 2^n].
struct WalshSpectrum {
  int n = 0;
  std::vector<std::int32_t> values;

  std::int32_t operator[](Point a) const { return values[a]; }

  std::int32_t max_abs() const {
    std::int32_t best = 0;
    for (auto v : values) best = std::max(best, std::abs(v));
    return best;
  }

  friend bool operator==(const WalshSpectrum&, const WalshSpectrum&) = default;
};

namespace detail {

// Unnormalized Walsh-Hadamard butterfly over a length-2^k vector.
inline void fwht_in_place(std::span<std::int32_t> v) {
  for (std::size_t half = 1; half < v.size(); half <<= 1)
    for (std::size_t base = 0; base < v.size(); base += 2 * half)
      for (std::size_t j = base; j < base + half; ++j) {
        const std::int32_t lo = v[j];
        const std::int32_t hi = v[j + half];
        v[j] = lo + hi;
        v[j + half] = lo - hi;
      }
}

}  // namespace detail

inline WalshSpectrum walsh_spectrum(const BooleanFunction& f) {
  WalshSpectrum s{f.variables(), std::vector<std::int32_t>(f.size())};
  for (std::uint64_t x = 0; x < f.size(); ++x) s.values[x] = f[static_cast<Point>(x)] ? -1 : 1;
  detail::fwht_in_place(s.values);
  return s;
}

/// 2^(n-1) - max|W|/2.
inline std::int64_t nonlinearity_from_spectrum(const WalshSpectrum& s) {
  return static_cast<std::int64_t>(point_count(s.n) / 2) - s.max_abs() / 2;
}

inline std::int64_t nonlinearity(const BooleanFunction& f) {
  return nonlinearity_from_spectrum(walsh_spectrum(f));
}

/// 2^(n-1) - 2^(n/2-1), the bent value. Defined for even n only.
inline std::int64_t bent_nonlinearity(int n) {
  return static_cast<std::int64_t>(point_count(n - 1) - point_count(n / 2 - 1));
}

/// First position where the spectrum is not +-2^(n/2), if any. Odd n has no
/// flat spectrum, so position 0 is reported.
inline std::optional<Point> first_non_flat_position(const WalshSpectrum& s) {
  if (s.n % 2 != 0) return Point{0};
  const std::int32_t flat = std::int32_t{1} << (s.n / 2);
  for (std::size_t a = 0; a < s.values.size(); ++a)
    if (std::abs(s.values[a]) != flat) return static_cast<Point>(a);
  return std::nullopt;
}

inline bool is_bent(const WalshSpectrum& s) { return !first_non_flat_position(s).has_value(); }

/// False for every odd n.
inline bool is_bent(const BooleanFunction& f) {
  if (f.variables() % 2 != 0) return false;
  return is_bent(walsh_spectrum(f));
}

/// Throws PreconditionError naming the first spectral position that breaks flatness.
inline void require_bent(const BooleanFunction& f, const char* who) {
  if (f.variables() % 2 != 0)
    throw PreconditionError(std::string(who) + ": input on F_2^" + std::to_string(f.variables()) +
                            " cannot be bent (odd variable count)");
  const auto s = walsh_spectrum(f);
  if (auto a = first_non_flat_position(s))
    throw PreconditionError(std::string(who) + ": input is not bent, W(" + std::to_string(*a) +
                            ") = " + std::to_string(s[*a]) + ", expected +-" +
                            std::to_string(1 << (f.variables() / 2)));
}

}  // namespace bentkit
