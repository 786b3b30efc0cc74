#include "series.hpp"

#include <bit>
#include <cassert>

namespace robin::detail {

std::int64_t bit_length(const ExactInt& v) {
  if (v == 0) return 0;
  return static_cast<std::int64_t>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

std::int64_t bit_length(std::uint64_t v) { return std::bit_width(v); }

RealInterval FixedEnclosure::to_interval(int precision_bits) const {
  return RealInterval::rounded(Dyadic(lo, -scale), Dyadic(hi, -scale), precision_bits);
}

namespace {

// floor(x * 2^shift) for shift of either sign.
ExactInt shifted(const ExactInt& x, std::int64_t shift) {
  ExactInt r;
  if (shift >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  } else {
    mpz_fdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
  }
  return r;
}

ExactInt pow2(std::int64_t e) {
  ExactInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

// Sum of u^(2i+1)/(2i+1) for u = z / 2^scale, z >= 0, returned as
// [S, S + err] in units of 2^-scale.
//
// With P_0 = z and P_i = floor(P_{i-1} z^2 / 2^(2 scale)), each P_i is at
// most i units below the true power, so each term floor(P_i/(2i+1)) is less
// than 1.5 units low. The loop stops at the first P_N = 0, whose true value
// is at most N units; the geometric tail beyond it adds under one unit.
void atanh_sum(const ExactInt& z, std::int64_t scale, ExactInt& lo, ExactInt& hi) {
  assert(z >= 0);
  ExactInt sum = 0;
  ExactInt power = z;
  const ExactInt z2 = z * z;
  const auto shift = static_cast<mp_bitcnt_t>(2 * scale);
  unsigned long n = 0;
  ExactInt term;
  while (power != 0) {
    mpz_fdiv_q_ui(term.get_mpz_t(), power.get_mpz_t(), 2 * n + 1);
    sum += term;
    power *= z2;
    mpz_fdiv_q_2exp(power.get_mpz_t(), power.get_mpz_t(), shift);
    ++n;
  }
  lo = sum;
  hi = sum + 2 * n + 3;
}

ExactInt atanh_lower(const ExactInt& z, std::int64_t scale) {
  ExactInt lo;
  ExactInt hi;
  if (z >= 0) {
    atanh_sum(z, scale, lo, hi);
    return lo;
  }
  atanh_sum(-z, scale, lo, hi);
  return -hi;
}

ExactInt atanh_upper(const ExactInt& z, std::int64_t scale) {
  ExactInt lo;
  ExactInt hi;
  if (z >= 0) {
    atanh_sum(z, scale, lo, hi);
    return hi;
  }
  atanh_sum(-z, scale, lo, hi);
  return -lo;
}

// Sum of u^i / i! for u = a / 2^scale in [0, 1), as [S, S + err].
//
// T_0 = 2^scale, T_i = floor(T_{i-1} a / (i 2^scale)); T_i is at most i
// units low. The loop stops at the first T_N = 0; the true t_N is at most N
// units and the tail after it is bounded by 2N.
void exp_sum(const ExactInt& a, std::int64_t scale, ExactInt& lo, ExactInt& hi) {
  assert(a >= 0);
  ExactInt term = pow2(scale);
  ExactInt sum = term;
  const auto shift = static_cast<mp_bitcnt_t>(scale);
  unsigned long i = 1;
  for (;; ++i) {
    term *= a;
    mpz_fdiv_q_2exp(term.get_mpz_t(), term.get_mpz_t(), shift);
    mpz_fdiv_q_ui(term.get_mpz_t(), term.get_mpz_t(), i);
    if (term == 0) break;
    sum += term;
  }
  const ExactInt n = i;
  lo = sum;
  hi = sum + n * (n - 1) / 2 + 2 * n + 1;
}

}  // namespace

FixedEnclosure atanh_fixed(const ExactInt& z_lo, const ExactInt& z_hi, std::int64_t scale) {
  return {atanh_lower(z_lo, scale), atanh_upper(z_hi, scale), scale};
}

FixedEnclosure exp_fixed(const Dyadic& a_lo, const Dyadic& a_hi, std::int64_t scale) {
  FixedEnclosure out{0, 0, scale};
  ExactInt unused;
  exp_sum(a_lo.floor_scaled(scale), scale, out.lo, unused);
  exp_sum(a_hi.ceil_scaled(scale), scale, unused, out.hi);
  return out;
}

std::int64_t exp_guard_bits(std::int64_t scale) {
  // error <= N(N-1)/2 + 2N + 1 with N <= scale + 2
  return 2 * bit_length(static_cast<std::uint64_t>(scale + 4)) + 2;
}

LnEvaluator::LnEvaluator(std::int64_t scale) : scale_(scale) {
  // ln 2 = 2 atanh(1/3)
  ExactInt third;
  ExactInt rem;
  const ExactInt one = pow2(scale);
  mpz_fdiv_qr_ui(third.get_mpz_t(), rem.get_mpz_t(), one.get_mpz_t(), 3);
  const FixedEnclosure a = atanh_fixed(third, third + 1, scale);
  ln2_ = {2 * a.lo, 2 * a.hi, scale};
}

FixedEnclosure LnEvaluator::ln(const Dyadic& x) const {
  if (x.sign() <= 0) throw Error(ErrorCode::DomainError, "logarithm of a non-positive number");

  // x = m 2^e = 2^k y with y in [3/4, 3/2)
  const ExactInt& m = x.mantissa();
  const std::int64_t len = bit_length(m);
  std::int64_t k = x.exponent() + len - 1;
  std::int64_t j = len - 1;  // y = m / 2^j
  if (len >= 2 && mpz_tstbit(m.get_mpz_t(), static_cast<mp_bitcnt_t>(len - 2))) {
    ++k;
    ++j;
  }

  // ln y = 2 atanh((m - 2^j) / (m + 2^j))
  const ExactInt p = pow2(j);
  const ExactInt num = shifted(m - p, scale_);
  const ExactInt den = m + p;
  ExactInt z_lo;
  ExactInt z_hi;
  mpz_fdiv_q(z_lo.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  mpz_cdiv_q(z_hi.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const FixedEnclosure a = atanh_fixed(z_lo, z_hi, scale_);

  FixedEnclosure out{2 * a.lo, 2 * a.hi, scale_};
  if (k >= 0) {
    out.lo += k * ln2_.lo;
    out.hi += k * ln2_.hi;
  } else {
    out.lo += k * ln2_.hi;
    out.hi += k * ln2_.lo;
  }
  return out;
}

FixedEnclosure LnEvaluator::ln(std::uint64_t x) const {
  ExactInt v;
  mpz_import(v.get_mpz_t(), 1, -1, sizeof x, 0, 0, &x);
  return ln(Dyadic(v, 0));
}

std::int64_t ln_working_scale(int precision_bits, std::int64_t log2_magnitude) {
  const std::int64_t p = precision_bits;
  const std::int64_t w_est = p + 64;
  return p + 3 + bit_length(static_cast<std::uint64_t>(log2_magnitude + 2)) +
         bit_length(static_cast<std::uint64_t>(2 * w_est + 16));
}

}  // namespace robin::detail
