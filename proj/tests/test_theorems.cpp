#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "robin/error.hpp"
#include "robin/primes.hpp"
#include "robin/theorems.hpp"

using namespace robin;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no robin::Error thrown";
  return ErrorCode::DomainError;
}

ExactRatio q(long a, long b) { return ExactRatio(ExactInt(a), ExactInt(b)); }

std::uint64_t next_prime(std::uint64_t x) {
  while (!oracle::is_prime_naive(x)) ++x;
  return x;
}

}  // namespace

TEST(PrimePowerLhs, Examples) {
  EXPECT_EQ(prime_power_lhs(2, 4), q(31, 16));
  EXPECT_EQ(prime_power_lhs(3, 1), q(4, 3));
  EXPECT_EQ(code_of([] { (void)prime_power_lhs(4, 2); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([] { (void)prime_power_lhs(2, 0); }), ErrorCode::ZeroExponent);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7919ULL}) {
    for (std::uint64_t k = 1; k <= 64; ++k) {
      const ExactRatio v = prime_power_lhs(p, k);
      ASSERT_LT(v, ExactRatio(2));
      ASSERT_LT(v, q(static_cast<long>(p), static_cast<long>(p - 1)));
      ASSERT_EQ(v, sigma_over_n(Factorization{{p, k}}));
    }
  }
}

TEST(VerifyPrimePowers, SmallLimits) {
  const auto at5041 = verify_prime_powers(5041);
  ASSERT_EQ(at5041.size(), 1U);
  EXPECT_EQ(at5041[0].factorization, (Factorization{{71, 2}}));
  EXPECT_EQ(at5041[0].verdict, Verdict::Satisfied);

  const auto upto = verify_prime_powers(100000);
  bool saw_8192 = false;
  std::uint64_t expected = 0;
  for (std::uint64_t n = 5041; n <= 100000; ++n) {
    const Factorization f = factorize(n);
    if (f.size() == 1) ++expected;
  }
  EXPECT_EQ(upto.size(), expected);
  for (std::size_t i = 0; i < upto.size(); ++i) {
    EXPECT_EQ(upto[i].verdict, Verdict::Satisfied);
    EXPECT_EQ(upto[i].factorization.size(), 1U);
    if (i > 0) {
      EXPECT_LT(upto[i - 1].factorization.value(), upto[i].factorization.value());
    }
    if (upto[i].factorization == Factorization{{2, 13}}) {
      saw_8192 = true;
      EXPECT_EQ(upto[i].lhs, q(16383, 8192));
    }
  }
  EXPECT_TRUE(saw_8192);
  EXPECT_EQ(code_of([] { (void)verify_prime_powers(5040); }), ErrorCode::DomainError);
}

TEST(VerifyPrimePowers, SampledGridUpToOneBillion) {
  int checked = 0;
  while (checked < 10000) {
    const std::uint64_t k = oracle::uniform(1, 29);
    const double lo = std::ceil(std::pow(5041.0, 1.0 / static_cast<double>(k)));
    const double hi = std::floor(std::pow(1e9, 1.0 / static_cast<double>(k)));
    if (hi < lo) continue;
    const std::uint64_t p = next_prime(oracle::uniform(static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(hi)));
    const Factorization f{{p, k}};
    if (!f.exceeds(5040) || f.exceeds(1'000'000'000)) continue;
    ASSERT_EQ(check(f).verdict, Verdict::Satisfied) << f.to_string();
    ASSERT_LT(prime_power_lhs(p, k), ExactRatio(2));
    ++checked;
  }
}

TEST(SubstitutePrime, Examples) {
  EXPECT_EQ(substitute_prime(Factorization{{2, 1}, {3, 1}}, 1, 5), (Factorization{{2, 1}, {5, 1}}));
  EXPECT_EQ(substitute_prime(Factorization{{2, 3}, {3, 1}}, 0, 5), (Factorization{{3, 1}, {5, 3}}));
  EXPECT_EQ(code_of([] { (void)substitute_prime(Factorization{{2, 4}, {3, 2}}, 0, 3); }), ErrorCode::CollidingBase);
  EXPECT_EQ(code_of([] { (void)substitute_prime(Factorization{{2, 1}, {3, 2}}, 0, 2); }), ErrorCode::NotAnIncrease);
  EXPECT_EQ(code_of([] { (void)substitute_prime(Factorization{{5, 1}}, 0, 3); }), ErrorCode::NotAnIncrease);
  EXPECT_EQ(code_of([] { (void)substitute_prime(Factorization{{2, 1}}, 0, 9); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([] { (void)substitute_prime(Factorization{{2, 1}}, 1, 5); }), ErrorCode::IndexOutOfRange);
}

TEST(SubstitutionReport, Examples) {
  const auto a = substitution_report(Factorization{{2, 4}, {3, 2}, {5, 1}, {7, 2}}, 3, 11);
  EXPECT_EQ(a.before.verdict, Verdict::Satisfied);
  EXPECT_EQ(a.after.verdict, Verdict::Satisfied);
  EXPECT_TRUE(a.lhs_decreased);
  EXPECT_TRUE(a.rhs_increased);
  EXPECT_EQ(a.old_prime, 7U);
  EXPECT_EQ(a.new_prime, 11U);
  EXPECT_EQ(a.after.factorization, (Factorization{{2, 4}, {3, 2}, {5, 1}, {11, 2}}));

  const auto b = substitution_report(primorial_factorization(6), 5, 17);
  EXPECT_EQ(b.after.verdict, Verdict::Satisfied);
  EXPECT_TRUE(b.lhs_decreased);
  EXPECT_TRUE(b.rhs_increased);

  EXPECT_LT(prime_power_lhs(5, 3), prime_power_lhs(3, 3));
  EXPECT_LT(prime_power_lhs(3, 3), prime_power_lhs(2, 3));

  const Factorization k5040{{2, 4}, {3, 2}, {5, 1}, {7, 1}};
  EXPECT_EQ(code_of([&] { (void)substitution_report(k5040, 0, 11, {4, 4, 2}); }), ErrorCode::IndeterminateBase);
}

TEST(SubstitutionReport, RandomizedSatisfiedBases) {
  const std::vector<std::uint64_t> pool = oracle::primes_naive(2000);
  int done = 0;
  while (done < 200) {
    const Factorization f = oracle::random_factorization(8, 6);
    if (!f.exceeds(5040) || check(f).verdict != Verdict::Satisfied) continue;
    const std::size_t idx = oracle::uniform(0, f.size() - 1);
    const std::uint64_t np = pool[oracle::uniform(0, pool.size() - 1)];
    bool collide = np <= f[idx].prime;
    for (const auto& e : f.entries()) collide = collide || e.prime == np;
    if (collide) continue;
    const SubstitutionReport r = substitution_report(f, idx, np);
    ASSERT_EQ(r.after.verdict, Verdict::Satisfied) << f.to_string() << " " << idx << " " << np;
    ASSERT_TRUE(r.lhs_decreased);
    ASSERT_TRUE(r.rhs_increased);
    ++done;
  }
}

TEST(PerPrimeFactor, DecreasesInThePrime) {
  const std::vector<std::uint64_t> ps = oracle::primes_naive(1000);
  for (std::uint64_t k = 1; k <= 16; ++k) {
    for (std::size_t i = 1; i < ps.size(); ++i) {
      ASSERT_LT(prime_power_lhs(ps[i], k), prime_power_lhs(ps[i - 1], k)) << ps[i] << "^" << k;
    }
  }
}

TEST(Bounds, Threshold) {
  const RealInterval t = threshold_5040();
  oracle::Real v;
  oracle::robin_rhs(v, ExactRatio(5040));
  EXPECT_TRUE(oracle::encloses(t, v));
  EXPECT_TRUE(threshold_5040(53).contains(threshold_5040(256)));
}

TEST(Bounds, UnboundedExponent) {
  const auto m2 = unbounded_exponent_bound(2);
  EXPECT_EQ(m2.bound_value, ExactRatio(3));
  EXPECT_TRUE(m2.passes);
  const auto m3 = unbounded_exponent_bound(3);
  EXPECT_EQ(m3.bound_value, q(15, 4));
  EXPECT_EQ(m3.bound_value.to_decimal(3), "3.75");
  EXPECT_TRUE(m3.passes);
  const auto m4 = unbounded_exponent_bound(4);
  EXPECT_EQ(m4.bound_value, q(35, 8));
  EXPECT_FALSE(m4.passes);
  for (std::size_t m = 1; m <= 60; ++m) {
    const auto r = unbounded_exponent_bound(m);
    EXPECT_EQ(r.passes, m <= 3) << m;
    EXPECT_EQ(r.passes, compare_values(r.bound_value, r.threshold.lo()) < 0);
    EXPECT_EQ(r.p_m, nth_prime(m));
  }
  EXPECT_EQ(code_of([] { (void)unbounded_exponent_bound(0); }), ErrorCode::DomainError);
}

TEST(Bounds, Squarefree) {
  const auto m9 = squarefree_bound(9);
  EXPECT_EQ(m9.bound_value, q(3981312, 1062347));
  EXPECT_EQ(m9.bound_value.to_decimal(4), "3.748");
  EXPECT_TRUE(m9.passes);
  EXPECT_EQ(squarefree_bound(2).bound_value, ExactRatio(2));
  const auto m10 = squarefree_bound(10);
  EXPECT_EQ(m10.bound_value, m9.bound_value * q(30, 29));
  EXPECT_EQ(m10.bound_value.to_decimal(4), "3.877");
  EXPECT_FALSE(m10.passes);
  for (std::size_t m = 1; m <= 60; ++m) EXPECT_EQ(squarefree_bound(m).passes, m <= 9) << m;
}
