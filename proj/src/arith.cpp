#include "robin/arith.hpp"

#include <algorithm>
#include <cmath>
#include <string_view>

#include "series.hpp"

namespace robin {

namespace detail {
extern const std::string_view kEulerGammaDigits;
}  // namespace detail

using detail::bit_length;

// ---------------------------------------------------------------- ExactRatio

ExactRatio::ExactRatio(const ExactInt& num, const ExactInt& den) : value_(num, den) {
  if (den == 0) throw Error(ErrorCode::DomainError, "zero denominator");
  value_.canonicalize();
}

ExactRatio::ExactRatio(const mpq_class& q) : value_(q) {
  if (value_.get_den() == 0) throw Error(ErrorCode::DomainError, "zero denominator");
  value_.canonicalize();
}

ExactRatio& ExactRatio::operator+=(const ExactRatio& o) {
  value_ += o.value_;
  return *this;
}

ExactRatio& ExactRatio::operator-=(const ExactRatio& o) {
  value_ -= o.value_;
  return *this;
}

ExactRatio& ExactRatio::operator*=(const ExactRatio& o) {
  value_ *= o.value_;
  return *this;
}

ExactRatio& ExactRatio::operator/=(const ExactRatio& o) {
  if (o.sign() == 0) throw Error(ErrorCode::DomainError, "division by zero");
  value_ /= o.value_;
  return *this;
}

ExactRatio operator-(const ExactRatio& a) { return ExactRatio(mpq_class(-a.value_)); }

std::string ExactRatio::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

namespace {

ExactInt pow10(long e) {
  ExactInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

// floor(log10 x) for x > 0.
long floor_log10(const mpq_class& x) {
  const auto bits = static_cast<double>(bit_length(x.get_num()) - bit_length(x.get_den()));
  auto e = static_cast<long>(std::floor(bits * 0.30102999566398120));
  auto power = [](long k) {
    return k >= 0 ? mpq_class(pow10(k)) : mpq_class(ExactInt(1), pow10(-k));
  };
  while (power(e) > x) --e;
  while (power(e + 1) <= x) ++e;
  return e;
}

}  // namespace

std::string ExactRatio::to_decimal(int digits) const {
  if (digits < 1) throw Error(ErrorCode::DomainError, "need at least one digit");
  if (sign() == 0) return "0";
  const mpq_class mag = abs(value_);
  long e = floor_log10(mag);

  // r = round_half_even(|x| * 10^(digits - 1 - e))
  auto scaled_round = [&](long exp10) {
    mpq_class s = mag;
    if (exp10 >= 0) {
      s *= mpq_class(pow10(exp10));
    } else {
      s /= mpq_class(pow10(-exp10));
    }
    ExactInt q;
    ExactInt r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    const int c = cmp(ExactInt(2 * r), s.get_den());
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
    return q;
  };
  ExactInt r = scaled_round(digits - 1 - e);
  if (r == pow10(digits)) {
    ++e;
    r /= 10;
  }

  std::string d = r.get_str();
  std::string out = sign() < 0 ? "-" : "";
  if (e < 0) {
    out += "0.";
    out.append(static_cast<std::size_t>(-e - 1), '0');
    out += d;
  } else if (e + 1 >= digits) {
    out += d;
    out.append(static_cast<std::size_t>(e + 1 - digits), '0');
  } else {
    out += d.substr(0, static_cast<std::size_t>(e + 1));
    out += '.';
    out += d.substr(static_cast<std::size_t>(e + 1));
  }
  return out;
}

// -------------------------------------------------------------------- Dyadic

Dyadic::Dyadic(ExactInt mantissa, std::int64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  const mp_bitcnt_t tz = mpz_scan1(mantissa_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_tdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), tz);
    exponent_ += static_cast<std::int64_t>(tz);
  }
}

namespace {

// floor or ceil of |x| rounded to `bits` significant bits, x != 0.
Dyadic round_magnitude(const mpq_class& x, int bits, bool up) {
  const ExactInt num = abs(x.get_num());
  const ExactInt& den = x.get_den();
  // |x| * 2^s has at least `bits` integer bits
  const std::int64_t s = bits + 1 - (bit_length(num) - bit_length(den));
  ExactInt n = num;
  ExactInt d = den;
  if (s >= 0) {
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
  } else {
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<mp_bitcnt_t>(-s));
  }
  ExactInt q;
  if (up) {
    mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  } else {
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  }
  const std::int64_t extra = bit_length(q) - bits;
  std::int64_t exp = -s;
  if (extra > 0) {
    if (up) {
      mpz_cdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), static_cast<mp_bitcnt_t>(extra));
    } else {
      mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), static_cast<mp_bitcnt_t>(extra));
    }
    exp += extra;
  }
  return Dyadic(q, exp);
}

}  // namespace

Dyadic Dyadic::round_down(const ExactRatio& x, int bits) {
  if (x.sign() == 0) return {};
  if (x.sign() > 0) return round_magnitude(x.get(), bits, false);
  return -round_magnitude(x.get(), bits, true);
}

Dyadic Dyadic::round_up(const ExactRatio& x, int bits) {
  if (x.sign() == 0) return {};
  if (x.sign() > 0) return round_magnitude(x.get(), bits, true);
  return -round_magnitude(x.get(), bits, false);
}

Dyadic Dyadic::round_down(int bits) const {
  const std::int64_t extra = bit_length(mantissa_) - bits;
  if (extra <= 0) return *this;
  ExactInt m;
  mpz_fdiv_q_2exp(m.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<mp_bitcnt_t>(extra));
  return Dyadic(m, exponent_ + extra);
}

Dyadic Dyadic::round_up(int bits) const {
  const std::int64_t extra = bit_length(mantissa_) - bits;
  if (extra <= 0) return *this;
  ExactInt m;
  mpz_cdiv_q_2exp(m.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<mp_bitcnt_t>(extra));
  return Dyadic(m, exponent_ + extra);
}

ExactInt Dyadic::floor_scaled(std::int64_t scale) const {
  ExactInt r;
  const std::int64_t e = exponent_ + scale;
  if (e >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_fdiv_q_2exp(r.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

ExactInt Dyadic::ceil_scaled(std::int64_t scale) const {
  ExactInt r;
  const std::int64_t e = exponent_ + scale;
  if (e >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_cdiv_q_2exp(r.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

ExactRatio Dyadic::to_ratio() const {
  ExactInt p = 1;
  if (exponent_ >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent_));
    return ExactRatio(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-exponent_));
  return ExactRatio(mantissa_, p);
}

double Dyadic::to_double() const {
  return std::ldexp(mantissa_.get_d(), static_cast<int>(std::clamp<std::int64_t>(exponent_, -100000, 100000)));
}

std::string Dyadic::to_decimal() const {
  if (exponent_ >= 0) return floor_scaled(0).get_str();
  const auto k = static_cast<unsigned long>(-exponent_);
  ExactInt digits;
  mpz_ui_pow_ui(digits.get_mpz_t(), 5, k);
  digits *= abs(mantissa_);
  std::string d = digits.get_str();
  if (d.size() <= k) d.insert(0, k + 1 - d.size(), '0');
  d.insert(d.size() - k, ".");
  return (sign() < 0 ? "-" : "") + d;
}

std::int64_t Dyadic::ilog2() const { return bit_length(mantissa_) - 1 + exponent_; }

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.sign() == 0) return b;
  if (b.sign() == 0) return a;
  const std::int64_t e = std::min(a.exponent_, b.exponent_);
  ExactInt ma;
  ExactInt mb;
  mpz_mul_2exp(ma.get_mpz_t(), a.mantissa_.get_mpz_t(), static_cast<mp_bitcnt_t>(a.exponent_ - e));
  mpz_mul_2exp(mb.get_mpz_t(), b.mantissa_.get_mpz_t(), static_cast<mp_bitcnt_t>(b.exponent_ - e));
  return Dyadic(ma + mb, e);
}

Dyadic operator-(const Dyadic& a) { return Dyadic(-a.mantissa_, a.exponent_); }

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  return (a - b).sign() <=> 0;
}

std::strong_ordering compare_values(const ExactRatio& a, const Dyadic& b) {
  const ExactInt num = a.numerator();
  const ExactInt den = a.denominator();
  ExactInt lhs;
  ExactInt rhs;
  if (b.exponent() >= 0) {
    lhs = num;
    mpz_mul_2exp(rhs.get_mpz_t(), b.mantissa().get_mpz_t(), static_cast<mp_bitcnt_t>(b.exponent()));
    rhs *= den;
  } else {
    mpz_mul_2exp(lhs.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(-b.exponent()));
    rhs = den * b.mantissa();
  }
  return cmp(lhs, rhs) <=> 0;
}

// -------------------------------------------------------------- RealInterval

RealInterval::RealInterval(Dyadic lo, Dyadic hi, int precision_bits)
    : lo_(std::move(lo)), hi_(std::move(hi)), precision_bits_(precision_bits) {
  if (lo_ > hi_) throw Error(ErrorCode::DomainError, "interval with lo > hi");
  if (precision_bits_ < 1) throw Error(ErrorCode::DomainError, "precision must be positive");
}

RealInterval RealInterval::rounded(const Dyadic& lo, const Dyadic& hi, int precision_bits) {
  return {lo.round_down(precision_bits + 3), hi.round_up(precision_bits + 3), precision_bits};
}

RealInterval RealInterval::enclose(const ExactRatio& x, int precision_bits) {
  return {Dyadic::round_down(x, precision_bits + 3), Dyadic::round_up(x, precision_bits + 3),
          precision_bits};
}

ExactRatio RealInterval::midpoint() const { return (lo_ + hi_).to_ratio() / ExactRatio(2); }

bool RealInterval::contains(const ExactRatio& x) const {
  return compare_values(x, lo_) >= 0 && compare_values(x, hi_) <= 0;
}

bool RealInterval::contains(const RealInterval& inner) const {
  return lo_ <= inner.lo_ && inner.hi_ <= hi_;
}

RealInterval add(const RealInterval& a, const RealInterval& b, int precision_bits) {
  return RealInterval::rounded(a.lo() + b.lo(), a.hi() + b.hi(), precision_bits);
}

RealInterval multiply(const RealInterval& a, const RealInterval& b, int precision_bits) {
  const Dyadic c[] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
  const auto [mn, mx] = std::minmax_element(std::begin(c), std::end(c));
  return RealInterval::rounded(*mn, *mx, precision_bits);
}

RealInterval divide(const RealInterval& a, const ExactRatio& q, int precision_bits) {
  if (q.sign() <= 0) throw Error(ErrorCode::DomainError, "interval division by a non-positive value");
  return {Dyadic::round_down(a.lo().to_ratio() / q, precision_bits + 3),
          Dyadic::round_up(a.hi().to_ratio() / q, precision_bits + 3), precision_bits};
}

// ----------------------------------------------------------- PrecisionConfig

void PrecisionConfig::validate() const {
  if (start_bits < 1 || max_bits < start_bits) {
    throw Error(ErrorCode::InvalidConfig, "precision config needs 1 <= start_bits <= max_bits");
  }
  if (max_bits > max_supported_bits()) {
    throw Error(ErrorCode::InvalidConfig,
                "max_bits exceeds supported precision " + std::to_string(max_supported_bits()));
  }
  if (escalation_factor < 2) throw Error(ErrorCode::InvalidConfig, "escalation_factor must be >= 2");
}

// ----------------------------------------------------------------- constants

int max_supported_bits() noexcept {
  // need 10^-D <= 2^-(p + 2)
  const auto d = static_cast<double>(detail::kEulerGammaDigits.size());
  return static_cast<int>(std::floor(d * 3.321928094887362)) - 4;
}

namespace {

void require_precision(int precision_bits) {
  if (precision_bits < 1 || precision_bits > max_supported_bits()) {
    throw Error(ErrorCode::PrecisionUnsupported,
                "precision " + std::to_string(precision_bits) + " outside [1, " +
                    std::to_string(max_supported_bits()) + "]");
  }
}

}  // namespace

RealInterval euler_gamma(int precision_bits) {
  require_precision(precision_bits);
  static const ExactInt digits(std::string(detail::kEulerGammaDigits), 10);
  static const ExactInt denom = pow10(static_cast<long>(detail::kEulerGammaDigits.size()));

  // digits / 10^D <= gamma < (digits + 1) / 10^D
  const std::int64_t w = precision_bits + 2;
  ExactInt lo;
  ExactInt hi;
  mpz_mul_2exp(lo.get_mpz_t(), digits.get_mpz_t(), static_cast<mp_bitcnt_t>(w));
  mpz_fdiv_q(lo.get_mpz_t(), lo.get_mpz_t(), denom.get_mpz_t());
  const ExactInt up = digits + 1;
  mpz_mul_2exp(hi.get_mpz_t(), up.get_mpz_t(), static_cast<mp_bitcnt_t>(w));
  mpz_cdiv_q(hi.get_mpz_t(), hi.get_mpz_t(), denom.get_mpz_t());
  return {Dyadic(lo, -w), Dyadic(hi, -w), precision_bits};
}

RealInterval exp_gamma(int precision_bits) {
  require_precision(precision_bits);
  const std::int64_t base = precision_bits + 4;
  const std::int64_t w = base + detail::exp_guard_bits(base);
  const RealInterval g = euler_gamma(static_cast<int>(std::min<std::int64_t>(w, max_supported_bits())));
  return detail::exp_fixed(g.lo(), g.hi(), w).to_interval(precision_bits);
}

RealInterval ln_interval(const ExactRatio& x, int precision_bits) {
  if (x.sign() <= 0) throw Error(ErrorCode::DomainError, "ln of a non-positive number");
  if (precision_bits < 1) throw Error(ErrorCode::DomainError, "precision must be positive");
  const std::int64_t mag =
      std::abs(bit_length(x.numerator()) - bit_length(x.denominator())) + 1;
  const std::int64_t w = detail::ln_working_scale(precision_bits, mag);
  const detail::LnEvaluator ln(w);

  const Dyadic lo = Dyadic::round_down(x, static_cast<int>(w + 2));
  const Dyadic hi = Dyadic::round_up(x, static_cast<int>(w + 2));
  if (lo == hi) return ln.ln(lo).to_interval(precision_bits);
  return detail::FixedEnclosure{ln.ln_lower(lo), ln.ln_upper(hi), w}.to_interval(precision_bits);
}

RealInterval ln_of_interval(const RealInterval& x, int precision_bits) {
  if (x.lo().sign() <= 0) throw Error(ErrorCode::DomainError, "ln of an interval reaching <= 0");
  if (precision_bits < 1) throw Error(ErrorCode::DomainError, "precision must be positive");
  const std::int64_t mag = std::max(std::abs(x.lo().ilog2()), std::abs(x.hi().ilog2())) + 1;
  const std::int64_t w = detail::ln_working_scale(precision_bits, mag);
  const detail::LnEvaluator ln(w);
  const Dyadic lo = x.lo().round_down(static_cast<int>(w + 2));
  const Dyadic hi = x.hi().round_up(static_cast<int>(w + 2));
  if (lo == hi) return ln.ln(lo).to_interval(precision_bits);
  return detail::FixedEnclosure{ln.ln_lower(lo), ln.ln_upper(hi), w}.to_interval(precision_bits);
}

// ---------------------------------------------------------------- comparison

Ordering compare(const ExactRatio& lhs, const RealInterval& rhs) {
  if (compare_values(lhs, rhs.lo()) < 0) return Ordering::Less;
  if (compare_values(lhs, rhs.hi()) > 0) return Ordering::Greater;
  return Ordering::Overlapping;
}

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Greater: return "Greater";
    case Ordering::Overlapping: return "Overlapping";
  }
  return "?";
}

}  // namespace robin
