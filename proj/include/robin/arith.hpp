#pragma once

// Exact integers and rationals plus outward-rounded dyadic intervals.
//
// Every real quantity (e^gamma, logarithms) is carried as a RealInterval
// whose endpoints are dyadic rationals m * 2^e. Endpoints are always rounded
// away from the enclosed value, so a comparison that separates an exact
// rational from an interval is a proof, not an approximation.

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "robin/error.hpp"

namespace robin {

using ExactInt = mpz_class;

/// Rational number kept in lowest terms with a positive denominator.
class ExactRatio {
 public:
  ExactRatio() : value_(0) {}
  ExactRatio(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  ExactRatio(const ExactInt& v) : value_(v) {}  // NOLINT
  ExactRatio(const ExactInt& num, const ExactInt& den);
  explicit ExactRatio(const mpq_class& q);

  ExactInt numerator() const { return value_.get_num(); }
  ExactInt denominator() const { return value_.get_den(); }
  const mpq_class& get() const { return value_; }
  int sign() const { return sgn(value_); }

  ExactRatio& operator+=(const ExactRatio& o);
  ExactRatio& operator-=(const ExactRatio& o);
  ExactRatio& operator*=(const ExactRatio& o);
  ExactRatio& operator/=(const ExactRatio& o);

  friend ExactRatio operator+(ExactRatio a, const ExactRatio& b) { return a += b; }
  friend ExactRatio operator-(ExactRatio a, const ExactRatio& b) { return a -= b; }
  friend ExactRatio operator*(ExactRatio a, const ExactRatio& b) { return a *= b; }
  friend ExactRatio operator/(ExactRatio a, const ExactRatio& b) { return a /= b; }
  friend ExactRatio operator-(const ExactRatio& a);

  friend bool operator==(const ExactRatio& a, const ExactRatio& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  /// "num/den", or just "num" when the denominator is 1.
  std::string to_string() const;

  /// Decimal rounded (half to even) to `digits` significant digits, e.g.
  /// 403/105 -> "3.83810". Zero prints as "0".
  std::string to_decimal(int digits) const;

 private:
  mpq_class value_;
};

/// m * 2^e with m odd (or m = 0, e = 0); the representation is canonical.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long v) : Dyadic(ExactInt(v), 0) {}  // NOLINT(google-explicit-constructor)
  Dyadic(ExactInt mantissa, std::int64_t exponent);

  const ExactInt& mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }
  int sign() const { return sgn(mantissa_); }

  /// Largest / smallest dyadic with at most `bits` significant bits that is
  /// <= / >= x.
  static Dyadic round_down(const ExactRatio& x, int bits);
  static Dyadic round_up(const ExactRatio& x, int bits);
  Dyadic round_down(int bits) const;
  Dyadic round_up(int bits) const;

  /// floor(x * 2^scale) / ceil(x * 2^scale) as integers.
  ExactInt floor_scaled(std::int64_t scale) const;
  ExactInt ceil_scaled(std::int64_t scale) const;

  ExactRatio to_ratio() const;
  double to_double() const;

  /// Exact decimal expansion (always finite for a dyadic).
  std::string to_decimal() const;

  /// floor(log2 |x|); x must be non-zero.
  std::int64_t ilog2() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a);

  friend bool operator==(const Dyadic& a, const Dyadic& b) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  ExactInt mantissa_ = 0;
  std::int64_t exponent_ = 0;
};

std::strong_ordering compare_values(const ExactRatio& a, const Dyadic& b);

/// Closed interval [lo, hi] guaranteed to contain a specific real number.
class RealInterval {
 public:
  RealInterval(Dyadic lo, Dyadic hi, int precision_bits);

  /// Smallest enclosure of lo..hi whose endpoints carry at most
  /// `precision_bits + 3` significant bits.
  static RealInterval rounded(const Dyadic& lo, const Dyadic& hi, int precision_bits);
  static RealInterval enclose(const ExactRatio& x, int precision_bits);

  const Dyadic& lo() const { return lo_; }
  const Dyadic& hi() const { return hi_; }
  int precision_bits() const { return precision_bits_; }

  Dyadic width() const { return hi_ - lo_; }
  ExactRatio midpoint() const;
  bool contains(const ExactRatio& x) const;
  bool contains(const RealInterval& inner) const;

  /// Strictly above / below every point of `other`.
  bool certainly_greater(const RealInterval& other) const { return lo_ > other.hi_; }
  bool certainly_less(const RealInterval& other) const { return hi_ < other.lo_; }

  friend bool operator==(const RealInterval&, const RealInterval&) = default;

 private:
  Dyadic lo_;
  Dyadic hi_;
  int precision_bits_;
};

RealInterval add(const RealInterval& a, const RealInterval& b, int precision_bits);
RealInterval multiply(const RealInterval& a, const RealInterval& b, int precision_bits);
/// a / q for an exact q > 0.
RealInterval divide(const RealInterval& a, const ExactRatio& q, int precision_bits);

struct PrecisionConfig {
  int start_bits = 53;
  int max_bits = 4096;
  int escalation_factor = 2;

  /// Throws InvalidConfig unless 1 <= start <= max <= max_supported_bits()
  /// and escalation_factor >= 2.
  void validate() const;
};

/// Largest precision the embedded Euler-Mascheroni digits can back.
int max_supported_bits() noexcept;

RealInterval euler_gamma(int precision_bits);
RealInterval exp_gamma(int precision_bits);
RealInterval ln_interval(const ExactRatio& x, int precision_bits);
RealInterval ln_of_interval(const RealInterval& x, int precision_bits);

enum class Ordering { Less, Greater, Overlapping };

Ordering compare(const ExactRatio& lhs, const RealInterval& rhs);

std::string to_string(Ordering o);

}  // namespace robin
