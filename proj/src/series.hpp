#pragma once

// Fixed-point series kernels shared by the arithmetic and Robin modules.
// A FixedEnclosure [lo, hi] * 2^-scale always contains the true value; the
// truncation and tail errors of each series are folded into hi - lo.

#include <cstdint>

#include "robin/arith.hpp"

namespace robin::detail {

struct FixedEnclosure {
  ExactInt lo;
  ExactInt hi;
  std::int64_t scale = 0;

  RealInterval to_interval(int precision_bits) const;
};

std::int64_t bit_length(const ExactInt& v);
std::int64_t bit_length(std::uint64_t v);

/// Encloses atanh(z) for every z in [z_lo, z_hi] * 2^-scale, |z| <= 1/4.
FixedEnclosure atanh_fixed(const ExactInt& z_lo, const ExactInt& z_hi, std::int64_t scale);

/// Encloses exp(a) for every a in [a_lo, a_hi], 0 <= a < 1.
FixedEnclosure exp_fixed(const Dyadic& a_lo, const Dyadic& a_hi, std::int64_t scale);

/// Extra working bits exp_fixed needs so its error stays below one unit at
/// 2^-(scale - guard).
std::int64_t exp_guard_bits(std::int64_t scale);

/// Natural logarithm evaluator at a fixed working scale. Holds one ln 2
/// enclosure so a batch of logarithms (e.g. over the primes of a
/// factorization) shares it. Not shared between threads.
class LnEvaluator {
 public:
  explicit LnEvaluator(std::int64_t scale);

  std::int64_t scale() const { return scale_; }
  const FixedEnclosure& ln2() const { return ln2_; }

  /// Encloses ln(x) for an exact positive dyadic. The width is at most
  /// (|log2 x| + 2) * (2 * scale + 16) units of 2^-scale.
  FixedEnclosure ln(const Dyadic& x) const;
  FixedEnclosure ln(std::uint64_t x) const;

  /// Lower / upper bound only, for interval endpoints.
  ExactInt ln_lower(const Dyadic& x) const { return ln(x).lo; }
  ExactInt ln_upper(const Dyadic& x) const { return ln(x).hi; }

 private:
  std::int64_t scale_;
  FixedEnclosure ln2_;
};

/// Working scale that makes an LnEvaluator result accurate to
/// 2^-(precision_bits + 2) for arguments with |log2 x| <= log2_magnitude.
std::int64_t ln_working_scale(int precision_bits, std::int64_t log2_magnitude);

}  // namespace robin::detail
