#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace linearr {

using BigInt = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator, so two equal values are also structurally identical.
class Rat {
 public:
  Rat() = default;
  Rat(std::int64_t value);  // NOLINT(google-explicit-constructor)
  explicit Rat(const BigInt& value);
  /// Throws std::domain_error if `den` is zero.
  Rat(const BigInt& num, const BigInt& den);

  /// Parses "p/q" or "p" with an optional leading sign.
  /// Throws std::invalid_argument on malformed input and std::domain_error
  /// on a zero denominator.
  static Rat parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rat abs() const;
  double to_double() const { return value_.get_d(); }

  /// Canonical "p/q" literal, or "p" when the denominator is 1.
  std::string to_string() const;
  /// Decimal approximation with `significant` significant digits. Used only
  /// for presentation output.
  std::string to_decimal(int significant = 12) const;

  const mpq_class& raw() const { return value_; }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  /// Throws std::domain_error on division by zero.
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  explicit Rat(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);

}  // namespace linearr

template <>
struct std::hash<linearr::Rat> {
  std::size_t operator()(const linearr::Rat& r) const { return r.hash(); }
};
