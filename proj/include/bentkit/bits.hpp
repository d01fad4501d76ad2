#pragma once

#include <bit>
#include <cstdint>

namespace bentkit {

/// Index of a point of F_2^n: x_j is bit j-1 (x_1 least significant).
using Point = std::uint32_t;

inline constexpr int kMaxVariables = 30;

constexpr std::uint64_t point_count(int n) { return std::uint64_t{1} << n; }

constexpr int weight(Point x) { return std::popcount(x); }

constexpr unsigned parity(Point x) { return static_cast<unsigned>(std::popcount(x)) & 1u; }

/// Dot product over F_2.
constexpr unsigned dot(Point a, Point x) { return parity(a & x); }

namespace detail {

// Bit j set iff popcount(j) is odd, for j in [0, 64).
constexpr std::uint64_t odd_weight_lanes() {
  std::uint64_t mask = 0;
  for (unsigned j = 0; j < 64; ++j)
    if (std::popcount(j) & 1u) mask |= std::uint64_t{1} << j;
  return mask;
}

inline constexpr std::uint64_t kOddLanes = odd_weight_lanes();
inline constexpr std::uint64_t kEvenLanes = ~kOddLanes;

// Masks selecting the low half of each 2^(k+1)-bit block, k = 0..5.
inline constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

}  // namespace detail

}  // namespace bentkit
