#pragma once

// Independent references for the tests: MPFR for real constants and
// logarithms, divisor enumeration for sigma, trial division for primes.
// Nothing here calls into the library's arithmetic.

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "robin/arith.hpp"
#include "robin/factorization.hpp"

namespace oracle {

constexpr mpfr_prec_t kPrec = 5000;

class Real {
 public:
  explicit Real(mpfr_prec_t prec = kPrec) { mpfr_init2(v_, prec); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  ~Real() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

inline void set_ratio(Real& out, const robin::ExactRatio& q) {
  mpfr_set_q(out.get(), q.get().get_mpq_t(), MPFR_RNDN);
}

inline Real* make_gamma() {
  auto* r = new Real();
  mpfr_const_euler(r->get(), MPFR_RNDN);
  return r;
}

inline const Real& gamma() {
  static const Real* g = make_gamma();
  return *g;
}

inline const Real& exp_gamma() {
  static const Real* e = [] {
    auto* r = new Real();
    mpfr_exp(r->get(), gamma().get(), MPFR_RNDN);
    return r;
  }();
  return *e;
}

// Exact comparison of a dyadic endpoint against an MPFR value.
inline int cmp(const robin::Dyadic& d, const Real& x) {
  const auto bits = static_cast<mpfr_prec_t>(mpz_sizeinbase(d.mantissa().get_mpz_t(), 2) + 2);
  Real e(bits);
  mpfr_set_z_2exp(e.get(), d.mantissa().get_mpz_t(), static_cast<mpfr_exp_t>(d.exponent()), MPFR_RNDN);
  return mpfr_cmp(e.get(), x.get());
}

inline bool encloses(const robin::RealInterval& iv, const Real& x) {
  return cmp(iv.lo(), x) <= 0 && cmp(iv.hi(), x) >= 0;
}

// Dyadic bounds around an MPFR value (MPFR values are dyadic already).
inline robin::Dyadic to_dyadic(const Real& x) {
  mpz_class m;
  const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.get());
  return robin::Dyadic(m, e);
}

// e^gamma * ln ln x
inline void robin_rhs(Real& out, const robin::ExactRatio& x) {
  set_ratio(out, x);
  mpfr_log(out.get(), out.get(), MPFR_RNDN);
  mpfr_log(out.get(), out.get(), MPFR_RNDN);
  mpfr_mul(out.get(), out.get(), exp_gamma().get(), MPFR_RNDN);
}

inline std::uint64_t sigma_naive(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      s += d;
      if (d * d != n) s += n / d;
    }
  }
  return s;
}

inline bool is_prime_naive(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> primes_naive(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (is_prime_naive(n)) out.push_back(n);
  }
  return out;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eed'2026ULL);
  return g;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

// Random factorization over primes below 200, 1..max_terms distinct bases.
inline robin::Factorization random_factorization(std::size_t max_terms, std::uint64_t max_exp) {
  static const std::vector<std::uint64_t> small = primes_naive(200);
  std::vector<std::uint64_t> pool = small;
  std::shuffle(pool.begin(), pool.end(), rng());
  const std::size_t terms = uniform(1, max_terms);
  std::vector<robin::PrimePower> e;
  for (std::size_t i = 0; i < terms; ++i) e.push_back({pool[i], uniform(1, max_exp)});
  return robin::Factorization::from_unsorted(std::move(e));
}

}  // namespace oracle
