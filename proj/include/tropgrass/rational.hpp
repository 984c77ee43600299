#pragma once

// Exact rational scalars and the extended reals of the min-plus semiring.

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace tropgrass {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "7", "-3/4" or "2.5". Throws std::invalid_argument on bad input.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q = 1) representation.
std::string to_string(const Rational& q);

Integer lcm_of_denominators(const Rational* begin, const Rational* end);

/// A real number or +infinity. +infinity is neutral for min and absorbing
/// for ordinary addition.
class ExtReal {
 public:
  ExtReal() = default;
  ExtReal(const Rational& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  ExtReal(long v) : value_(v) {}             // NOLINT(google-explicit-constructor)

  static ExtReal infinity() {
    ExtReal r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// Throws std::domain_error when infinite.
  const Rational& value() const;

  /// Tropical multiplication.
  friend ExtReal operator+(const ExtReal& a, const ExtReal& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtReal(a.value_ + b.value_);
  }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Rational value_{0};
  bool infinite_ = false;
};

/// Tropical addition.
inline ExtReal trop_min(const ExtReal& a, const ExtReal& b) { return b < a ? b : a; }

/// "inf" or a rational literal.
ExtReal parse_ext_real(std::string_view text);
std::string to_string(const ExtReal& x);

}  // namespace tropgrass
