#include "robin/robin.hpp"

#include <algorithm>

#include "robin/primes.hpp"
#include "series.hpp"

namespace robin {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Satisfied: return "Satisfied";
    case Verdict::Violated: return "Violated";
    case Verdict::Indeterminate: return "Indeterminate";
  }
  return "?";
}

namespace {

void require_nonempty(const Factorization& f) {
  if (f.empty()) throw Error(ErrorCode::EmptyFactorization, "empty factorization (n = 1)");
}

// sigma(p^k) = (p^(k+1) - 1) / (p - 1), an exact division.
ExactInt sigma_prime_power(std::uint64_t p, std::uint64_t k) {
  ExactInt num;
  mpz_ui_pow_ui(num.get_mpz_t(), p, k + 1);
  num -= 1;
  mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), p - 1);
  return num;
}

}  // namespace

ExactInt sigma(const Factorization& f) {
  require_nonempty(f);
  ExactInt s = 1;
  for (const auto& [p, k] : f.entries()) s *= sigma_prime_power(p, k);
  return s;
}

ExactRatio sigma_over_n(const Factorization& f) {
  require_nonempty(f);
  ExactRatio r(1);
  ExactInt pk;
  for (const auto& [p, k] : f.entries()) {
    mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
    // gcd(sigma(p^k), p) = 1, so each factor is already reduced
    r *= ExactRatio(sigma_prime_power(p, k), pk);
  }
  return r;
}

RealInterval log_n(const Factorization& f, int precision_bits) {
  require_nonempty(f);
  if (precision_bits < 1) throw Error(ErrorCode::DomainError, "precision must be positive");
  std::int64_t weight = 0;
  for (const auto& [p, k] : f.entries()) {
    weight += static_cast<std::int64_t>(k) * (detail::bit_length(p) + 2);
  }
  const std::int64_t w = detail::ln_working_scale(precision_bits, weight);
  const detail::LnEvaluator ln(w);
  ExactInt lo = 0;
  ExactInt hi = 0;
  for (const auto& [p, k] : f.entries()) {
    const detail::FixedEnclosure e = ln.ln(p);
    const ExactInt kk = static_cast<unsigned long>(k);
    lo += kk * e.lo;
    hi += kk * e.hi;
  }
  return detail::FixedEnclosure{lo, hi, w}.to_interval(precision_bits);
}

RealInterval robin_rhs_from_log(const RealInterval& ln_n, int precision_bits) {
  if (precision_bits > max_supported_bits()) {
    throw Error(ErrorCode::PrecisionUnsupported, "precision beyond the embedded constant");
  }
  if (ln_n.lo() <= Dyadic(1)) {
    throw Error(ErrorCode::RhsUndefined, "ln n is not certified above 1; ln ln n is not positive");
  }
  const int inner = std::min(precision_bits + 4, max_supported_bits());
  const RealInterval lnln = ln_of_interval(ln_n, inner);
  return multiply(exp_gamma(inner), lnln, precision_bits);
}

RealInterval robin_rhs(const Factorization& f, int precision_bits) {
  return robin_rhs_from_log(log_n(f, precision_bits + 4), precision_bits);
}

CheckResult check(const Factorization& f, const PrecisionConfig& cfg) {
  cfg.validate();
  require_nonempty(f);
  CheckResult r;
  r.factorization = f;
  r.lhs = sigma_over_n(f);

  std::int64_t bits = cfg.start_bits;
  for (;;) {
    const int b = static_cast<int>(bits);
    r.precision_used = b;
    const RealInterval ln_n = log_n(f, b + 4);
    if (ln_n.hi() <= Dyadic(1)) {
      // e^gamma ln ln n <= 0 < sigma(n)/n
      r.verdict = Verdict::Violated;
      r.reason = VerdictReason::RhsUndefined;
      r.rhs.reset();
      r.margin_lower_bound.reset();
      return r;
    }
    if (ln_n.lo() > Dyadic(1)) {
      RealInterval rhs = robin_rhs_from_log(ln_n, b);
      const Ordering ord = compare(r.lhs, rhs);
      if (ord != Ordering::Overlapping) {
        r.verdict = ord == Ordering::Less ? Verdict::Satisfied : Verdict::Violated;
        r.margin_lower_bound = Dyadic::round_down(rhs.lo().to_ratio() - r.lhs, b + 3);
        r.rhs = std::move(rhs);
        return r;
      }
      r.rhs = std::move(rhs);
    }
    if (bits >= cfg.max_bits) {
      r.verdict = Verdict::Indeterminate;
      return r;
    }
    bits = std::min<std::int64_t>(bits * cfg.escalation_factor, cfg.max_bits);
  }
}

CheckResult check_n(const ExactInt& n, const PrecisionConfig& cfg) {
  if (n < 2) throw Error(ErrorCode::DomainError, "Robin check needs n >= 2");
  return check(factorize(n), cfg);
}

}  // namespace robin
