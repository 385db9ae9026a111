#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace nsbox {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator. All arithmetic is exact; there is no rounding and
/// no floating point anywhere on this path.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose, mirrors integer literals
  Rational(long num, unsigned long den);

  /// Parses "num/den" or a plain integer, optionally signed. Throws Error.
  static Rational parse(std::string_view text);

  /// Lowest-terms text form: "num/den", or just "num" for integers.
  std::string str() const;

  /// Fixed-point decimal rendering with `sig_digits` significant digits,
  /// round-half-up, trailing zeros trimmed. Exact integer arithmetic only.
  std::string decimal(int sig_digits = 12) const;

  int sign() const { return sgn(v_); }
  Rational abs() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws Error on division by zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;  // invariant: canonical (lowest terms, positive denominator)
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace nsbox
