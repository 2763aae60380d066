#ifndef UNLATTICE_RATIONAL_HPP
#define UNLATTICE_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace unlattice {

/// Exact scalar. mpq_class keeps numerator/denominator reduced with a
/// positive denominator after every arithmetic operation.
using Rational = mpq_class;

using Index = std::uint64_t;

/// n/d in canonical form. Prefer this over Rational(n, d), which does not reduce.
inline Rational ratio(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Formats as "p/q" (denominator always written, e.g. "3/1").
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q". Throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);
Rational pow2(std::int64_t exponent);  // 2^exponent, exponent may be negative
Rational floor_rational(const Rational& r);
Rational ceil_rational(const Rational& r);
bool is_integer(const Rational& r);

/// Largest k with 2^k <= n, for n >= 1.
unsigned floor_log2(Index n);

/// A rational q with q^p <= value, exact when value is a perfect p-th power.
Rational root_floor(const Rational& value, unsigned p);

/// Nonnegative extended scalar: a finite rational or +infinity.
class ExtScalar {
 public:
  ExtScalar() : value_(Rational(0)) {}
  ExtScalar(Rational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  ExtScalar(long v) : value_(Rational(v)) {}       // NOLINT(google-explicit-constructor)

  static ExtScalar infinity() {
    ExtScalar e;
    e.value_.reset();
    return e;
  }

  bool is_finite() const { return value_.has_value(); }
  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const;

  ExtScalar& operator+=(const ExtScalar& other);
  friend ExtScalar operator+(ExtScalar a, const ExtScalar& b) { return a += b; }
  friend ExtScalar operator*(const ExtScalar& a, const Rational& b);

  friend bool operator==(const ExtScalar& a, const ExtScalar& b);
  friend std::strong_ordering operator<=>(const ExtScalar& a, const ExtScalar& b);

  double to_double() const;

 private:
  std::optional<Rational> value_;
};

ExtScalar max(const ExtScalar& a, const ExtScalar& b);
ExtScalar min(const ExtScalar& a, const ExtScalar& b);

/// "p/q" or "inf".
std::string to_string(const ExtScalar& e);

}  // namespace unlattice

#endif  // UNLATTICE_RATIONAL_HPP
