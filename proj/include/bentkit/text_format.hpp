#pragma once

// Text formats:
//
//   truth table   "n=<int>" on the first line, then ceil(2^n / 4) hex digits,
//                 most significant digit first; bit 0 of the table is the
//                 least significant bit of the last digit. Whitespace between
//                 digits is ignored.
//
//   ANF           terms joined by '+', monomials written x1*x2*..., the
//                 constant term as 1 and the zero polynomial as 0,
//                 e.g. "x1*x2 + x3 + 1".

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bentkit/boolean_function.hpp"

namespace bentkit {

inline std::size_t hex_digit_count(int n) {
  return static_cast<std::size_t>((point_count(n) + 3) / 4);
}

/// Hex digits only, no header.
inline std::string to_hex(const BooleanFunction& f) {
  const std::size_t digits = hex_digit_count(f.variables());
  std::string out;
  out.reserve(digits);
  for (std::size_t k = digits; k-- > 0;) {
    unsigned nibble = 0;
    for (unsigned b = 0; b < 4; ++b) {
      const std::uint64_t x = 4 * k + b;
      if (x < f.size() && f[static_cast<Point>(x)]) nibble |= 1u << b;
    }
    out.push_back("0123456789abcdef"[nibble]);
  }
  return out;
}

inline std::string to_truth_table_text(const BooleanFunction& f) {
  return "n=" + std::to_string(f.variables()) + "\n" + to_hex(f) + "\n";
}

namespace detail {

struct Cursor {
  std::size_t line = 1;
  std::size_t column = 1;

  void advance(char c) {
    if (c == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
};

inline int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

inline BooleanFunction table_from_digits(int n, const std::vector<int>& digits) {
  const std::size_t expected = hex_digit_count(n);
  if (digits.size() != expected)
    throw FormatError("expected " + std::to_string(expected) + " hex digits for n=" +
                      std::to_string(n) + ", got " + std::to_string(digits.size()));
  const std::uint64_t total = point_count(n);
  if (total < 4 && (digits.front() >> total) != 0)
    throw FormatError("hex digit sets bits beyond 2^" + std::to_string(n) + " points");
  return BooleanFunction::from_rule(n, [&](Point x) {
    const int nibble = digits[expected - 1 - x / 4];
    return ((nibble >> (x % 4)) & 1) != 0;
  });
}

// Hex digits from `text`, skipping whitespace; positions are reported relative to `start`.
inline std::vector<int> scan_hex(std::string_view text, Cursor start) {
  std::vector<int> digits;
  Cursor at = start;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      const int v = hex_value(c);
      if (v < 0) throw ParseError(std::string("invalid hex digit '") + c + "'", at.line, at.column);
      digits.push_back(v);
    }
    at.advance(c);
  }
  return digits;
}

}  // namespace detail

/// Inline hex digits (no header) for a function on `n` variables.
inline BooleanFunction parse_hex(int n, std::string_view hex) {
  detail::check_variable_count(n);
  return detail::table_from_digits(n, detail::scan_hex(hex, {}));
}

inline BooleanFunction parse_truth_table(std::string_view text) {
  detail::Cursor at;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) at.advance(text[i++]);
  };
  skip_space();
  if (text.substr(i, 2) != "n=") throw ParseError("expected header 'n=<int>'", at.line, at.column);
  at.advance(text[i++]);
  at.advance(text[i++]);
  const detail::Cursor number_at = at;
  int n = 0;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    if (n > kMaxVariables) break;
    n = n * 10 + (text[i] - '0');
    ++digits;
    at.advance(text[i++]);
  }
  if (digits == 0) throw ParseError("expected integer after 'n='", number_at.line, number_at.column);
  if (n < 1 || n > kMaxVariables)
    throw FormatError("header n=" + std::to_string(n) + " outside [1, " +
                      std::to_string(kMaxVariables) + "]");
  while (i < text.size() && text[i] != '\n') {
    if (!std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError("unexpected character after header", at.line, at.column);
    at.advance(text[i++]);
  }
  return detail::table_from_digits(n, detail::scan_hex(text.substr(i), at));
}

inline BooleanFunction read_truth_table(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_truth_table(text);
}

/// Monomials ordered by degree (highest first), then by their variable lists.
inline std::string to_anf_text(const AnfPolynomial& p) {
  std::vector<Point> terms;
  for (std::uint64_t u = 0; u < p.size(); ++u)
    if (p[static_cast<Point>(u)]) terms.push_back(static_cast<Point>(u));
  if (terms.empty()) return "0";
  auto variables_of = [](Point u) {
    std::vector<int> vars;
    for (int j = 0; u; ++j, u >>= 1)
      if (u & 1u) vars.push_back(j + 1);
    return vars;
  };
  std::sort(terms.begin(), terms.end(), [&](Point a, Point b) {
    if (weight(a) != weight(b)) return weight(a) > weight(b);
    return variables_of(a) < variables_of(b);
  });
  std::ostringstream out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (t) out << " + ";
    if (terms[t] == 0) {
      out << '1';
      continue;
    }
    const auto vars = variables_of(terms[t]);
    for (std::size_t k = 0; k < vars.size(); ++k) out << (k ? "*x" : "x") << vars[k];
  }
  return out.str();
}

/// Parses ANF text. Without `n`, the variable count is the largest index used
/// (at least 1). Repeated terms cancel, as they do over F_2.
inline AnfPolynomial parse_anf(std::string_view text, std::optional<int> n = std::nullopt) {
  if (n) detail::check_variable_count(*n);
  struct Term {
    Point mask;
    detail::Cursor where;
    int highest;
  };
  std::vector<Term> terms;
  detail::Cursor at;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) at.advance(text[i++]);
  };
  auto fail = [&](const std::string& what) -> ParseError { return ParseError(what, at.line, at.column); };

  for (;;) {
    skip_space();
    if (i >= text.size()) throw fail("expected term");
    const detail::Cursor term_at = at;
    if (text[i] == '0' || text[i] == '1') {
      const bool one = text[i] == '1';
      at.advance(text[i++]);
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        throw fail("constant term must be 0 or 1");
      if (one) terms.push_back({0, term_at, 0});
    } else {
      Point mask = 0;
      int highest = 0;
      for (;;) {
        skip_space();
        if (i >= text.size() || text[i] != 'x') throw fail("expected variable 'x<k>'");
        at.advance(text[i++]);
        const detail::Cursor index_at = at;
        long index = 0;
        std::size_t digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          if (index <= kMaxVariables) index = index * 10 + (text[i] - '0');
          ++digits;
          at.advance(text[i++]);
        }
        if (digits == 0) throw ParseError("expected variable index", index_at.line, index_at.column);
        if (index < 1 || index > kMaxVariables)
          throw ParseError("variable index out of range", index_at.line, index_at.column);
        mask |= Point{1} << (index - 1);
        highest = std::max(highest, static_cast<int>(index));
        skip_space();
        if (i < text.size() && text[i] == '*') {
          at.advance(text[i++]);
          continue;
        }
        break;
      }
      terms.push_back({mask, term_at, highest});
    }
    skip_space();
    if (i >= text.size()) break;
    if (text[i] != '+') throw fail(std::string("unexpected character '") + text[i] + "'");
    at.advance(text[i++]);
  }

  int vars = 1;
  for (const auto& t : terms) vars = std::max(vars, t.highest);
  if (n) {
    for (const auto& t : terms)
      if (t.highest > *n)
        throw ParseError("variable x" + std::to_string(t.highest) + " exceeds n=" + std::to_string(*n),
                         t.where.line, t.where.column);
    vars = *n;
  }
  std::vector<std::uint64_t> words(detail::word_count(vars), 0);
  for (const auto& t : terms) words[t.mask >> 6] ^= std::uint64_t{1} << (t.mask & 63);
  return AnfPolynomial::from_words(vars, std::move(words));
}

}  // namespace bentkit
