#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "tropcomp/error.hpp"

namespace tropcomp {

/// Exact rational number. GMP keeps it canonical (coprime, positive denominator).
using Rational = mpq_class;

/// Parses `p` or `p/q` with optional leading sign. Returns nullopt on malformed
/// text or a zero denominator.
inline std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') ++i;
  bool seen_digit = false;
  bool seen_slash = false;
  bool digit_after_slash = false;
  for (std::size_t k = i; k < text.size(); ++k) {
    char c = text[k];
    if (c >= '0' && c <= '9') {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
    } else {
      return std::nullopt;
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash)) return std::nullopt;

  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational r;
  if (r.set_str(s, 10) != 0) return std::nullopt;
  if (r.get_den() == 0) return std::nullopt;
  r.canonicalize();
  return r;
}

/// num/den in canonical form; the two-argument mpq_class constructor skips this.
inline Rational make_rational(long num, long den) {
  if (den == 0) throw InvalidArgument("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

/// A rational extended by +infinity, the additive zero of the min-plus semiring.
class ExtRational {
 public:
  ExtRational() = default;  // zero
  ExtRational(const Rational& v) : value_(v) {}            // NOLINT
  ExtRational(long v) : value_(Rational(v)) {}             // NOLINT
  ExtRational(int v) : value_(Rational(v)) {}              // NOLINT

  static ExtRational infinity() {
    ExtRational r;
    r.infinite_ = true;
    r.value_ = 0;
    return r;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  /// Finite value; throws on +infinity.
  const Rational& value() const {
    if (infinite_) throw InvalidArgument("ExtRational: value() of +inf");
    return value_;
  }

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtRational(Rational(a.value_ + b.value_));
  }
  ExtRational& operator+=(const ExtRational& o) { return *this = *this + o; }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string str() const { return infinite_ ? std::string("inf") : value_.get_str(); }

  /// Accepts `inf` or a rational literal.
  static std::optional<ExtRational> parse(std::string_view text) {
    if (text == "inf" || text == "+inf") return infinity();
    auto r = parse_rational(text);
    if (!r) return std::nullopt;
    return ExtRational(*r);
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtRational& r) {
    return os << r.str();
  }

 private:
  Rational value_{0};
  bool infinite_ = false;
};

/// Tropical sum.
inline ExtRational trop_min(const ExtRational& a, const ExtRational& b) {
  return b < a ? b : a;
}

}  // namespace tropcomp
