#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string_view>
#include <vector>

#include "robin/factorization.hpp"

namespace robin {

/// Exactly the primes <= limit, ascending.
struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;
};

struct SieveOptions {
  std::uint64_t segment_size = std::uint64_t{1} << 20;
  /// Limits above this raise LimitTooLarge (the prime list alone would be
  /// hundreds of megabytes).
  std::uint64_t max_limit = 1'000'000'000;
};

/// Segmented sieve of Eratosthenes; working memory is one segment plus the
/// base primes up to sqrt(limit).
PrimeTable sieve(std::uint64_t limit, const SieveOptions& options = {});

/// Deterministic for all 64-bit inputs (Miller-Rabin, fixed witness set).
bool is_prime(std::uint64_t n);

/// Process-wide prime list that grows on demand. Readers get an immutable
/// snapshot; growth happens under a lock and is published atomically.
class PrimeSource {
 public:
  static PrimeSource& shared();

  /// Snapshot containing at least every prime <= limit.
  std::shared_ptr<const PrimeTable> up_to(std::uint64_t limit);
  /// Snapshot containing at least the first `count` primes.
  std::shared_ptr<const PrimeTable> first(std::size_t count);

 private:
  std::mutex mutex_;
  std::shared_ptr<const PrimeTable> table_ = std::make_shared<const PrimeTable>();
};

/// 1-indexed: nth_prime(1) == 2.
std::uint64_t nth_prime(std::size_t m);

/// The first m primes, each with exponent 1.
Factorization primorial_factorization(std::size_t m);

/// Trial division below 10^6, then Pollard-Brent rho on what remains.
/// Throws InputTooLarge above 2^64 - 1 and DomainError below 2.
Factorization factorize(const ExactInt& n);
Factorization factorize(std::uint64_t n);

/// Grammar: term ("*" term)*, term = integer ("^" integer)?, whitespace
/// allowed between tokens. Bases must be distinct 64-bit primes.
Factorization parse_factor_string(std::string_view s);

}  // namespace robin
