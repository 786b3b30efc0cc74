#pragma once

// Executable forms of the prime-power and prime-substitution results and of
// the first-m-primes bounds compared against e^gamma ln ln 5040.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "robin/robin.hpp"

namespace robin {

struct SubstitutionReport {
  CheckResult before;
  CheckResult after;
  std::size_t index = 0;
  std::uint64_t old_prime = 0;
  std::uint64_t new_prime = 0;
  bool lhs_decreased = false;
  /// ln n after is certified strictly greater than ln n before.
  bool rhs_increased = false;
};

struct BoundReport {
  std::size_t m = 0;
  std::uint64_t p_m = 0;
  ExactRatio bound_value;
  RealInterval threshold;  // e^gamma ln ln 5040
  bool passes = false;     // bound_value < threshold.lo
};

/// (p^(k+1) - 1) / (p^k (p - 1)).
ExactRatio prime_power_lhs(std::uint64_t p, std::uint64_t k);

/// Checks every prime power p^k with 5040 < p^k <= limit, ascending by n.
std::vector<CheckResult> verify_prime_powers(std::uint64_t limit, const PrecisionConfig& cfg = {});

/// Replaces the base at `index` by a larger prime and re-sorts. Errors:
/// IndexOutOfRange, NotPrime, NotAnIncrease, CollidingBase.
Factorization substitute_prime(const Factorization& f, std::size_t index, std::uint64_t new_prime);

SubstitutionReport substitution_report(const Factorization& f, std::size_t index,
                                       std::uint64_t new_prime, const PrecisionConfig& cfg = {});

/// e^gamma ln ln 5040, the fixed threshold the bound calculators use.
RealInterval threshold_5040(int precision_bits = 53);

/// prod_{j<=m} p_j / (p_j - 1): sigma(n)/n bound for any exponents.
BoundReport unbounded_exponent_bound(std::size_t m, int precision_bits = 53);

/// prod_{j<=m} (p_j + 1) / p_j: sigma(n)/n of the m-th primorial.
BoundReport squarefree_bound(std::size_t m, int precision_bits = 53);

}  // namespace robin
