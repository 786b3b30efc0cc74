#pragma once

// Range scanning, the first-m-primes table (q_m against alpha_m), and the
// exponent-increment experiments.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "robin/robin.hpp"

namespace robin {

struct ScanViolation {
  std::uint64_t n = 0;
  CheckResult result;
};

struct ScanReport {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<ScanViolation> violations;  // ascending n
  std::vector<std::uint64_t> indeterminates;
  std::uint64_t checked_count = 0;
  std::uint64_t satisfied_count = 0;
};

/// Called once per violation, in ascending n, as soon as every smaller n
/// has been decided.
using ViolationSink = std::function<void(const ScanViolation&)>;

/// Checks every n in [lo, hi]. sigma(n) comes from a sieve over each block;
/// n whose sigma(n)/n is already below a certified lower bound of the
/// block's smallest right-hand side are Satisfied without a full check.
/// Output does not depend on worker_count.
ScanReport scan_range(std::uint64_t lo, std::uint64_t hi, const PrecisionConfig& cfg = {},
                      unsigned worker_count = 1, const ViolationSink& on_violation = {});

/// sigma(n) for every n in [lo, hi], by sieving the block.
std::vector<unsigned __int128> sigma_block(std::uint64_t lo, std::uint64_t hi);

struct ConjectureRow {
  std::size_t m = 0;
  std::uint64_t p_m = 0;
  ExactRatio q_m;                       // prod (p_j + 1) / p_j
  std::optional<RealInterval> alpha_m;  // e^gamma ln(sum ln p_j); empty for m = 1
  std::optional<RealInterval> ratio;    // alpha_m / q_m
  bool n_exceeds_5040 = false;
};

using RowSink = std::function<void(const ConjectureRow&)>;

/// Streams rows m = 1..m_max; alpha_m is computed from a running sum of
/// ln p_j, never from the primorial itself.
void for_each_conjecture_row(std::size_t m_max, const PrecisionConfig& cfg, const RowSink& sink);
std::vector<ConjectureRow> conjecture31_table(std::size_t m_max, const PrecisionConfig& cfg = {});

struct ProbeReport {
  Factorization base;
  CheckResult base_result;
  /// (j, check of base with k_j raised by one)
  std::vector<std::pair<std::size_t, CheckResult>> increments;
};

/// Requires check(f) = Satisfied and n > 5040 (BaseNotSatisfied otherwise).
ProbeReport conjecture32_probe(const Factorization& f, const PrecisionConfig& cfg = {});

struct SearchOptions {
  std::size_t prime_count_max = 9;
  std::uint64_t exponent_max = 6;
  double log_n_max = 27.631021115928547;  // ln 10^12
  /// Only k_1 >= k_2 >= ... over a prefix of the primes. When false every
  /// exponent vector in {0..exponent_max}^prime_count_max is visited.
  bool non_increasing = true;
  unsigned worker_count = 1;
};

/// Candidate bases: n > 5040 and sum k_j ln p_j <= log_n_max (evaluated in
/// double precision; this only bounds the search, it decides no verdict).
std::vector<Factorization> enumerate_candidates(const SearchOptions& options);

struct Counterexample {
  Factorization base;
  std::size_t index = 0;
  CheckResult after;
};

struct SearchReport {
  std::uint64_t candidate_count = 0;
  std::uint64_t probed_count = 0;
  /// Candidates whose own check was not Satisfied (none are expected).
  std::vector<CheckResult> unsatisfied_bases;
  /// Increments that came back Violated or Indeterminate.
  std::vector<Counterexample> counterexamples;
};

SearchReport conjecture32_search(const SearchOptions& options, const PrecisionConfig& cfg = {});

}  // namespace robin
