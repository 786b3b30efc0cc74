#include <gtest/gtest.h>

#include <thread>

#include "oracle.hpp"
#include "robin/error.hpp"
#include "robin/primes.hpp"

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

ExactInt multiply_back(const Factorization& f) {
  ExactInt n = 1;
  for (const auto& [p, k] : f.entries()) {
    for (std::uint64_t i = 0; i < k; ++i) n *= static_cast<unsigned long>(p);
  }
  return n;
}

}  // namespace

TEST(Sieve, SmallLimits) {
  EXPECT_EQ(sieve(10).primes, (std::vector<std::uint64_t>{2, 3, 5, 7}));
  const auto t23 = sieve(23).primes;
  EXPECT_EQ(t23.size(), 9U);
  EXPECT_EQ(t23.back(), 23U);
  EXPECT_EQ(sieve(2).primes, (std::vector<std::uint64_t>{2}));
  EXPECT_EQ(code_of([] { (void)sieve(1); }), ErrorCode::DomainError);
}

TEST(Sieve, MatchesTrialDivision) {
  for (std::uint64_t limit : {2ULL, 3ULL, 97ULL, 1000ULL, 4096ULL, 9973ULL, 10000ULL}) {
    EXPECT_EQ(sieve(limit).primes, oracle::primes_naive(limit)) << limit;
  }
  // Tiny segments stress the segment boundaries.
  EXPECT_EQ(sieve(10000, {.segment_size = 64}).primes, oracle::primes_naive(10000));
  EXPECT_EQ(sieve(10000, {.segment_size = 7}).primes, oracle::primes_naive(10000));
}

TEST(Sieve, CountToOneMillion) { EXPECT_EQ(sieve(1'000'000).primes.size(), 78498U); }

TEST(Sieve, Budget) {
  EXPECT_EQ(code_of([] { (void)sieve(2'000'000, {.segment_size = 1 << 20, .max_limit = 1'000'000}); }),
            ErrorCode::LimitTooLarge);
}

TEST(IsPrime, AgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(is_prime(n), oracle::is_prime_naive(n)) << n;
  EXPECT_TRUE(is_prime(18446744073709551557ULL));   // largest 64-bit prime
  EXPECT_FALSE(is_prime(18446744073709551615ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));            // strong pseudoprime to 2, 3, 5, 7
  EXPECT_FALSE(is_prime(3825123056546413051ULL));   // strong pseudoprime to bases up to 23
  EXPECT_TRUE(is_prime(1000000007ULL));
}

TEST(NthPrime, Examples) {
  EXPECT_EQ(nth_prime(1), 2U);
  EXPECT_EQ(nth_prime(9), 23U);
  EXPECT_EQ(nth_prime(10000), 104729U);
  const auto table = sieve(104729).primes;
  EXPECT_EQ(table.size(), 10000U);
  EXPECT_EQ(code_of([] { (void)nth_prime(0); }), ErrorCode::DomainError);
}

TEST(Primorial, Examples) {
  EXPECT_EQ(primorial_factorization(4), (Factorization{{2, 1}, {3, 1}, {5, 1}, {7, 1}}));
  EXPECT_EQ(primorial_factorization(4).value(), 210);
  EXPECT_EQ(primorial_factorization(6).value(), 30030);
  EXPECT_FALSE(primorial_factorization(5).exceeds(5040));
  EXPECT_TRUE(primorial_factorization(6).exceeds(5040));
  EXPECT_EQ(primorial_factorization(1), (Factorization{{2, 1}}));
}

TEST(PrimeSource, ConcurrentReadersSeeConsistentTables) {
  std::vector<std::jthread> threads;
  std::atomic<int> bad{0};
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([t, &bad] {
      for (int i = 1; i <= 20; ++i) {
        const std::uint64_t limit = 50000ULL * static_cast<std::uint64_t>(i + t);
        const auto table = PrimeSource::shared().up_to(limit);
        if (table->limit < limit || table->primes.empty() || table->primes.back() > table->limit ||
            !std::is_sorted(table->primes.begin(), table->primes.end())) {
          ++bad;
        }
      }
    });
  }
  threads.clear();
  EXPECT_EQ(bad.load(), 0);
}

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(std::uint64_t{5040}), (Factorization{{2, 4}, {3, 2}, {5, 1}, {7, 1}}));
  EXPECT_EQ(factorize(std::uint64_t{5041}), (Factorization{{71, 2}}));
  EXPECT_EQ(factorize(std::uint64_t{2}), (Factorization{{2, 1}}));
  EXPECT_EQ(code_of([] { (void)factorize(std::uint64_t{1}); }), ErrorCode::DomainError);
  const ExactInt too_big("18446744073709551616");
  EXPECT_EQ(code_of([&] { (void)factorize(too_big); }), ErrorCode::InputTooLarge);
  EXPECT_EQ(factorize(ExactInt("18446744073709551615")).value(), ExactInt("18446744073709551615"));
}

TEST(Factorize, ExhaustiveMultiplyBack) {
  for (std::uint64_t n = 2; n <= 100000; ++n) {
    const Factorization f = factorize(n);
    ASSERT_EQ(multiply_back(f), n) << n;
    for (const auto& pk : f.entries()) ASSERT_TRUE(oracle::is_prime_naive(pk.prime)) << n;
  }
}

TEST(Factorize, Random64Bit) {
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t n = oracle::uniform(2, ~0ULL) >> oracle::uniform(0, 40);
    if (n < 2) continue;
    const Factorization f = factorize(n);
    ASSERT_EQ(multiply_back(f), ExactInt(std::to_string(n))) << n;
    for (const auto& pk : f.entries()) ASSERT_TRUE(is_prime(pk.prime)) << n;
  }
}

TEST(Factorize, HardSemiprimes) {
  // Products of two primes above the trial-division range.
  const std::uint64_t p = 1000003, q = 4294967291ULL;
  EXPECT_EQ(factorize(p * q), (Factorization{{p, 1}, {q, 1}}));
  const std::uint64_t r = 4294967279ULL;
  EXPECT_EQ(factorize(r * q), (Factorization{{r, 1}, {q, 1}}));
  EXPECT_EQ(factorize(q * q), (Factorization{{q, 2}}));
}

TEST(ParseFactorString, Grammar) {
  EXPECT_EQ(parse_factor_string("2^4*3^2*5*7"), (Factorization{{2, 4}, {3, 2}, {5, 1}, {7, 1}}));
  EXPECT_EQ(parse_factor_string("3*2"), (Factorization{{2, 1}, {3, 1}}));
  EXPECT_EQ(parse_factor_string(" 2 ^ 3 * 71^2 "), (Factorization{{2, 3}, {71, 2}}));
  EXPECT_EQ(code_of([] { (void)parse_factor_string("4^2*3"); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([] { (void)parse_factor_string("2*2"); }), ErrorCode::DuplicateBase);
  EXPECT_EQ(code_of([] { (void)parse_factor_string("2^0"); }), ErrorCode::ZeroExponent);
  for (const char* bad : {"", "*", "2*", "2^", "^2", "2**3", "2^3^4", "x", "2^-1", "2 3"}) {
    EXPECT_EQ(code_of([bad] { (void)parse_factor_string(bad); }), ErrorCode::ParseError) << bad;
  }
  EXPECT_EQ(code_of([] { (void)parse_factor_string("99999999999999999999999"); }), ErrorCode::InputTooLarge);
  EXPECT_EQ(code_of([] { (void)parse_factor_string("1"); }), ErrorCode::NotPrime);
}

TEST(ParseFactorString, RoundTripsFormatter) {
  for (int i = 0; i < 1000; ++i) {
    const Factorization f = oracle::random_factorization(8, 40);
    ASSERT_EQ(parse_factor_string(f.to_string()), f) << f.to_string();
  }
  EXPECT_EQ((Factorization{{2, 4}, {3, 2}, {5, 1}, {7, 1}}).to_string(), "2^4*3^2*5*7");
}

TEST(Factorization, Invariants) {
  EXPECT_EQ(code_of([] { Factorization({{3, 1}, {2, 1}}); }), ErrorCode::DomainError);
  EXPECT_EQ(code_of([] { Factorization({{2, 0}}); }), ErrorCode::ZeroExponent);
  EXPECT_EQ(code_of([] { (void)Factorization::from_unsorted({{3, 1}, {3, 2}}); }), ErrorCode::DuplicateBase);
  const Factorization big{{2, 1000}};
  EXPECT_TRUE(big.exceeds(~0ULL));
  EXPECT_FALSE((Factorization{{2, 12}}).exceeds(5040));
  EXPECT_TRUE((Factorization{{2, 13}}).exceeds(5040));
  EXPECT_FALSE((Factorization{{2, 4}, {3, 2}, {5, 1}, {7, 1}}).exceeds(5040));
}
