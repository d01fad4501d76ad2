#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bentkit/boolean_function.hpp"
#include "bentkit/walsh.hpp"

namespace bentkit {

enum class WeightClass { even, odd };

inline const char* to_string(WeightClass c) { return c == WeightClass::even ? "even" : "odd"; }

/// Split of F_2^n by Hamming-weight parity. The even half is the [n, n-1, 2]
/// parity-check code C_0; the odd half is its coset C_1.
struct WeightParityPartition {
  int n = 0;
  std::vector<Point> even_set;
  std::vector<Point> odd_set;
};

inline WeightParityPartition partition(int n) {
  detail::check_variable_count(n);
  WeightParityPartition p{n, {}, {}};
  p.even_set.reserve(point_count(n - 1));
  p.odd_set.reserve(point_count(n - 1));
  for (std::uint64_t x = 0; x < point_count(n); ++x)
    (parity(static_cast<Point>(x)) ? p.odd_set : p.even_set).push_back(static_cast<Point>(x));
  return p;
}

/// Structural facts about the even-weight code, checked by direct enumeration.
struct CodeStructure {
  bool contains_zero = false;
  bool xor_closed = false;
  int min_nonzero_weight = 0;  // 0 when the code is {0}
  bool odd_coset_relation = false;  // b ^ even_set == odd_set for every odd b
};

inline CodeStructure inspect_code_structure(const WeightParityPartition& p) {
  CodeStructure out;
  std::vector<char> in_even(point_count(p.n), 0);
  std::vector<char> in_odd(point_count(p.n), 0);
  for (Point x : p.even_set) in_even[x] = 1;
  for (Point x : p.odd_set) in_odd[x] = 1;
  out.contains_zero = in_even[0] != 0;

  out.xor_closed = true;
  for (Point x : p.even_set)
    for (Point y : p.even_set)
      if (!in_even[x ^ y]) out.xor_closed = false;

  for (Point x : p.even_set)
    if (x != 0 && (out.min_nonzero_weight == 0 || weight(x) < out.min_nonzero_weight))
      out.min_nonzero_weight = weight(x);

  // XOR with a fixed b is injective, so landing inside odd_set for every x
  // together with equal sizes means b ^ even_set is all of odd_set.
  out.odd_coset_relation = p.even_set.size() == p.odd_set.size();
  for (Point b : p.odd_set)
    for (Point x : p.even_set)
      if (!in_odd[b ^ x]) out.odd_coset_relation = false;
  return out;
}

/// offset + span(basis) inside F_2^n.
class AffineSubspace {
 public:
  enum class Kind { full, even_weight, odd_weight, general };

  static AffineSubspace full(int n) {
    std::vector<Point> basis;
    for (int j = 0; j < checked(n); ++j) basis.push_back(Point{1} << j);
    return AffineSubspace(n, std::move(basis), 0, Kind::full);
  }

  /// C_0: even-weight vectors, spanned by e_1 ^ e_j.
  static AffineSubspace even_weight(int n) { return AffineSubspace(checked(n), parity_basis(n), 0, Kind::even_weight); }

  /// C_1 = e_1 ^ C_0.
  static AffineSubspace odd_weight(int n) { return AffineSubspace(checked(n), parity_basis(n), 1, Kind::odd_weight); }

  static AffineSubspace of(WeightClass c, int n) {
    return c == WeightClass::even ? even_weight(n) : odd_weight(n);
  }

  /// Throws DomainError when the basis is dependent or leaves F_2^n.
  static AffineSubspace spanned_by(int n, std::vector<Point> basis, Point offset) {
    checked(n);
    if (offset >= point_count(n)) throw DomainError("offset outside F_2^n");
    AffineSubspace c(n, std::move(basis), offset, Kind::general);
    for (Point v : c.basis_)
      if (v >= point_count(n)) throw DomainError("basis vector outside F_2^n");
    if (c.echelon_.size() != c.basis_.size()) throw DomainError("basis vectors are linearly dependent");
    return c;
  }

  int ambient() const noexcept { return n_; }
  int dimension() const noexcept { return static_cast<int>(basis_.size()); }
  std::uint64_t size() const noexcept { return point_count(dimension()); }
  std::span<const Point> basis() const noexcept { return basis_; }
  Point offset() const noexcept { return offset_; }
  Kind kind() const noexcept { return kind_; }

  bool contains(Point x) const {
    switch (kind_) {
      case Kind::full: return x < point_count(n_);
      case Kind::even_weight: return x < point_count(n_) && parity(x) == 0;
      case Kind::odd_weight: return x < point_count(n_) && parity(x) == 1;
      case Kind::general: break;
    }
    if (x >= point_count(n_)) return false;
    Point r = x ^ offset_;
    for (Point v : echelon_)
      if (r & leading_bit(v)) r ^= v;
    return r == 0;
  }

  /// Visits the 2^m points in Gray-code order over the basis, starting at the offset.
  template <class Visit>
  void for_each_point(Visit&& visit) const {
    Point p = offset_;
    visit(p);
    for (std::uint64_t i = 1; i < size(); ++i) {
      p ^= basis_[static_cast<std::size_t>(std::countr_zero(i))];
      visit(p);
    }
  }

  std::vector<Point> points() const {
    std::vector<Point> out;
    out.reserve(size());
    for_each_point([&](Point p) { out.push_back(p); });
    return out;
  }

 private:
  AffineSubspace(int n, std::vector<Point> basis, Point offset, Kind kind)
      : n_(n), basis_(std::move(basis)), offset_(offset), kind_(kind) {
    for (Point v : basis_) insert_echelon(v);
  }

  static int checked(int n) {
    detail::check_variable_count(n);
    return n;
  }

  static std::vector<Point> parity_basis(int n) {
    std::vector<Point> basis;
    for (int j = 1; j < n; ++j) basis.push_back(Point{1} | (Point{1} << j));
    return basis;
  }

  static Point leading_bit(Point v) { return std::bit_floor(v); }

  // Keeps echelon_ sorted by distinct leading bits, highest first.
  void insert_echelon(Point v) {
    for (Point e : echelon_)
      if (v & leading_bit(e)) v ^= e;
    if (v == 0) return;
    for (Point& e : echelon_)
      if (e & leading_bit(v)) e ^= v;
    echelon_.push_back(v);
    std::sort(echelon_.begin(), echelon_.end(), std::greater<>());
  }

  int n_;
  std::vector<Point> basis_;
  Point offset_;
  Kind kind_;
  std::vector<Point> echelon_;
};

/// A function defined on an affine subspace. Values are stored in an ambient
/// truth table; entries outside the domain are zero and never read.
struct RestrictedFunction {
  BooleanFunction values;
  AffineSubspace domain;

  bool operator()(Point x) const {
    if (!domain.contains(x)) throw DomainError("point " + std::to_string(x) + " outside the domain");
    return values[x];
  }
};

struct RestrictedBalanceReport {
  std::uint64_t zeros_even = 0;
  std::uint64_t ones_even = 0;
  std::uint64_t zeros_odd = 0;
  std::uint64_t ones_odd = 0;
  bool balanced_even = false;
  bool balanced_odd = false;
};

/// Preimage counts of f on the even- and odd-weight halves of F_2^n.
inline RestrictedBalanceReport restricted_balance(const BooleanFunction& f) {
  RestrictedBalanceReport r;
  const auto words = f.words();
  const std::uint64_t half = f.size() / 2;
  for (std::size_t w = 0; w < words.size(); ++w) {
    // The word index contributes its own parity to every lane (n >= 6 only;
    // for n < 6 there is a single word and w = 0).
    const bool flip = parity(static_cast<Point>(w)) != 0;
    const std::uint64_t even_lanes = flip ? detail::kOddLanes : detail::kEvenLanes;
    r.ones_even += static_cast<std::uint64_t>(std::popcount(words[w] & even_lanes));
    r.ones_odd += static_cast<std::uint64_t>(std::popcount(words[w] & ~even_lanes));
  }
  r.zeros_even = half - r.ones_even;
  r.zeros_odd = half - r.ones_odd;
  // n = 1: each class is a single point and cannot split evenly.
  r.balanced_even = f.variables() > 1 && r.ones_even == r.zeros_even;
  r.balanced_odd = f.variables() > 1 && r.ones_odd == r.zeros_odd;
  return r;
}

namespace detail {

inline void check_same_space(const BooleanFunction& f, const AffineSubspace& c) {
  if (f.variables() != c.ambient())
    throw DomainError("function on F_2^" + std::to_string(f.variables()) + " restricted to subspace of F_2^" +
                      std::to_string(c.ambient()));
}

}  // namespace detail

/// Sum over x in c of (-1)^(f(x) ^ a.x), for any ambient a.
inline std::int64_t restricted_walsh(const BooleanFunction& f, const AffineSubspace& c, Point a) {
  detail::check_same_space(f, c);
  if (a >= f.size()) throw DomainError("spectral position outside F_2^n");
  std::int64_t sum = 0;
  auto term = [&](Point x) { sum += (f[x] ^ dot(a, x)) ? -1 : 1; };
  if (c.kind() == AffineSubspace::Kind::general) {
    c.for_each_point(term);
  } else {
    for (std::uint64_t x = 0; x < f.size(); ++x)
      if (c.contains(static_cast<Point>(x))) term(static_cast<Point>(x));
  }
  return sum;
}

inline std::int64_t restricted_walsh(const RestrictedFunction& g, Point a) {
  return restricted_walsh(g.values, g.domain, a);
}

/// Restricted transform at every ambient a: one butterfly over the signed
/// indicator of c.
inline WalshSpectrum restricted_spectrum(const BooleanFunction& f, const AffineSubspace& c) {
  detail::check_same_space(f, c);
  WalshSpectrum s{f.variables(), std::vector<std::int32_t>(f.size(), 0)};
  c.for_each_point([&](Point x) { s.values[x] = f[x] ? -1 : 1; });
  detail::fwht_in_place(s.values);
  return s;
}

/// 2^(m-1) - max over all 2^n ambient a of |W|/2.
inline std::int64_t restricted_nonlinearity(const BooleanFunction& f, const AffineSubspace& c) {
  const auto s = restricted_spectrum(f, c);
  return (static_cast<std::int64_t>(c.size()) - s.max_abs()) / 2;
}

inline std::int64_t restricted_nonlinearity(const RestrictedFunction& g) {
  return restricted_nonlinearity(g.values, g.domain);
}

/// Attains 2^(m-1) - 2^(m/2-1). Positions where the restricted character
/// vanishes on c may carry W = 0; only the maximum is constrained.
inline bool is_restricted_bent(const BooleanFunction& f, const AffineSubspace& c) {
  const int m = c.dimension();
  if (m % 2 != 0) throw DomainError("restricted bentness needs an even-dimensional subspace, got m=" + std::to_string(m));
  const auto bound = static_cast<std::int64_t>(point_count(m) - point_count(m / 2)) / 2;
  return restricted_nonlinearity(f, c) == bound;
}

inline bool is_restricted_bent(const RestrictedFunction& g) { return is_restricted_bent(g.values, g.domain); }

/// Running tally of the parity-balance property over a population of bent
/// functions. Tallies from disjoint populations merge by addition.
struct ParityBalanceTally {
  std::uint64_t checked = 0;
  std::uint64_t even_balanced = 0;  // includes functions balanced on both classes
  std::uint64_t odd_balanced = 0;
  std::uint64_t both_balanced = 0;
  std::vector<BooleanFunction> counterexamples;

  void add(const BooleanFunction& f) {
    const auto r = restricted_balance(f);
    ++checked;
    even_balanced += r.balanced_even;
    odd_balanced += r.balanced_odd;
    both_balanced += r.balanced_even && r.balanced_odd;
    if (!r.balanced_even && !r.balanced_odd) counterexamples.push_back(f);
  }

  void merge(const ParityBalanceTally& other) {
    checked += other.checked;
    even_balanced += other.even_balanced;
    odd_balanced += other.odd_balanced;
    both_balanced += other.both_balanced;
    counterexamples.insert(counterexamples.end(), other.counterexamples.begin(), other.counterexamples.end());
  }

  bool holds() const noexcept { return counterexamples.empty(); }
};

}  // namespace bentkit
