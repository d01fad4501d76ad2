#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bentkit/bits.hpp"
#include "bentkit/errors.hpp"

namespace bentkit {

namespace detail {

inline void check_variable_count(int n) {
  if (n < 1 || n > kMaxVariables)
    throw DomainError("variable count " + std::to_string(n) + " outside [1, " +
                      std::to_string(kMaxVariables) + "]");
}

inline std::size_t word_count(int n) {
  return n <= 6 ? 1 : static_cast<std::size_t>(point_count(n - 6));
}

inline std::uint64_t tail_mask(int n) {
  return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << point_count(n)) - 1;
}

}  // namespace detail

/// Packed 2^n-bit table shared by truth tables and ANF coefficient tables.
/// Bit i lives in word i/64 at position i%64; bits past 2^n are always zero.
template <class Derived>
class BitTable {
 public:
  int variables() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return point_count(n_); }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool operator[](Point x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1u; }

  bool at(Point x) const {
    if (x >= size())
      throw DomainError("point " + std::to_string(x) + " outside F_2^" + std::to_string(n_));
    return (*this)[x];
  }

  std::uint64_t count_ones() const noexcept {
    std::uint64_t total = 0;
    for (auto w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
  }

  friend bool operator==(const BitTable& lhs, const BitTable& rhs) = default;

  static Derived zero(int n) { return Derived(n, std::vector<std::uint64_t>(checked_words(n), 0)); }

  static Derived constant(int n, bool value) {
    std::vector<std::uint64_t> w(checked_words(n), value ? ~std::uint64_t{0} : 0);
    w.back() &= detail::tail_mask(n);
    return Derived(n, std::move(w));
  }

  /// Builds the table from `rule(x)` evaluated at every point.
  template <class Rule>
  static Derived from_rule(int n, Rule&& rule) {
    std::vector<std::uint64_t> w(checked_words(n), 0);
    const std::uint64_t total = point_count(n);
    for (std::uint64_t x = 0; x < total; ++x)
      if (rule(static_cast<Point>(x))) w[x >> 6] |= std::uint64_t{1} << (x & 63);
    return Derived(n, std::move(w));
  }

  static Derived from_words(int n, std::vector<std::uint64_t> w) {
    if (w.size() != checked_words(n))
      throw DomainError("expected " + std::to_string(detail::word_count(n)) +
                        " words for n=" + std::to_string(n) + ", got " + std::to_string(w.size()));
    if (w.back() & ~detail::tail_mask(n)) throw DomainError("bits set past 2^n");
    return Derived(n, std::move(w));
  }

  /// `bits[i]` is the value at point i; the length must be 2^n.
  static Derived from_bits(int n, std::span<const int> bits) {
    if (bits.size() != point_count(checked_n(n)))
      throw DomainError("expected " + std::to_string(point_count(n)) + " bits, got " +
                        std::to_string(bits.size()));
    return from_rule(n, [&](Point x) { return bits[x] != 0; });
  }

 protected:
  BitTable(int n, std::vector<std::uint64_t> w) : n_(n), words_(std::move(w)) {}

  std::vector<std::uint64_t>& mutable_words() noexcept { return words_; }

 private:
  static int checked_n(int n) {
    detail::check_variable_count(n);
    return n;
  }
  static std::size_t checked_words(int n) { return detail::word_count(checked_n(n)); }

  int n_;
  std::vector<std::uint64_t> words_;
};

/// Truth table of f: F_2^n -> F_2.
class BooleanFunction : public BitTable<BooleanFunction> {
  friend class BitTable<BooleanFunction>;
  using BitTable::BitTable;

 public:
  /// Truth table with bits XORed pointwise with `other`'s.
  BooleanFunction operator^(const BooleanFunction& other) const {
    if (other.variables() != variables()) throw DomainError("dimension mismatch in XOR");
    BooleanFunction out = *this;
    auto& w = out.mutable_words();
    for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= other.words()[i];
    return out;
  }

  BooleanFunction complement() const { return *this ^ constant(variables(), true); }
};

/// Coefficients a_u of the algebraic normal form, indexed like truth tables.
class AnfPolynomial : public BitTable<AnfPolynomial> {
  friend class BitTable<AnfPolynomial>;
  using BitTable::BitTable;

 public:
  /// Largest weight of a monomial with nonzero coefficient; 0 for the zero polynomial.
  int degree() const noexcept {
    int best = 0;
    for (std::uint64_t u = 0; u < size(); ++u)
      if ((*this)[static_cast<Point>(u)]) best = std::max(best, weight(static_cast<Point>(u)));
    return best;
  }
};

/// l(x) = a.x ^ a0 on F_2^n.
struct AffineFunctionSpec {
  int n = 1;
  Point a = 0;
  bool a0 = false;

  friend bool operator==(const AffineFunctionSpec&, const AffineFunctionSpec&) = default;
};

inline bool evaluate(const BooleanFunction& f, Point x) { return f.at(x); }

inline bool affine_eval(const AffineFunctionSpec& spec, Point x) {
  return (dot(spec.a, x) ^ static_cast<unsigned>(spec.a0)) != 0;
}

inline BooleanFunction affine_function(const AffineFunctionSpec& spec) {
  if (spec.a >= point_count(spec.n)) throw DomainError("affine coefficient vector exceeds F_2^n");
  return BooleanFunction::from_rule(spec.n, [&](Point x) { return affine_eval(spec, x); });
}

inline BooleanFunction add_affine(const BooleanFunction& f, const AffineFunctionSpec& spec) {
  if (spec.n != f.variables())
    throw DomainError("affine function on F_2^" + std::to_string(spec.n) +
                      " added to function on F_2^" + std::to_string(f.variables()));
  return f ^ affine_function(spec);
}

inline std::uint64_t hamming_weight(const BooleanFunction& f) { return f.count_ones(); }

inline std::uint64_t hamming_distance(const BooleanFunction& f, const BooleanFunction& g) {
  return hamming_weight(f ^ g);
}

namespace detail {

// In-place binary Moebius butterfly: t[i | bit] ^= t[i] for every level.
inline std::vector<std::uint64_t> moebius(int n, std::span<const std::uint64_t> in) {
  std::vector<std::uint64_t> w(in.begin(), in.end());
  const int in_word_levels = std::min(n, 6);
  for (auto& word : w)
    for (int k = 0; k < in_word_levels; ++k) word ^= (word & kLowHalf[k]) << (1u << k);
  for (int k = 6; k < n; ++k) {
    const std::size_t stride = std::size_t{1} << (k - 6);
    for (std::size_t base = 0; base < w.size(); base += 2 * stride)
      for (std::size_t j = base; j < base + stride; ++j) w[j + stride] ^= w[j];
  }
  return w;
}

}  // namespace detail

/// a_u = XOR of f(x) over x <= u, in n * 2^(n-1) XORs.
inline AnfPolynomial truth_table_to_anf(const BooleanFunction& f) {
  return AnfPolynomial::from_words(f.variables(), detail::moebius(f.variables(), f.words()));
}

/// The Moebius transform is an involution, so the inverse reuses the butterfly.
inline BooleanFunction anf_to_truth_table(const AnfPolynomial& p) {
  return BooleanFunction::from_words(p.variables(), detail::moebius(p.variables(), p.words()));
}

inline int algebraic_degree(const BooleanFunction& f) { return truth_table_to_anf(f).degree(); }

}  // namespace bentkit
