#pragma once

// Robin's criterion sigma(n) < e^gamma n ln ln n, evaluated in the
// normalized form sigma(n)/n < e^gamma ln(sum k_j ln p_j) so n itself is
// never needed.

#include <optional>
#include <string>

#include "robin/arith.hpp"
#include "robin/factorization.hpp"

namespace robin {

enum class Verdict { Satisfied, Violated, Indeterminate };

std::string to_string(Verdict v);

enum class VerdictReason {
  None,
  /// ln n <= 1, so e^gamma ln ln n <= 0 < sigma(n)/n (only n = 2).
  RhsUndefined,
};

struct CheckResult {
  Factorization factorization;
  ExactRatio lhs;                   // sigma(n)/n
  std::optional<RealInterval> rhs;  // e^gamma ln ln n; empty when undefined
  Verdict verdict = Verdict::Indeterminate;
  VerdictReason reason = VerdictReason::None;
  int precision_used = 0;
  /// rhs.lo - lhs rounded down, so it never overstates the margin.
  std::optional<Dyadic> margin_lower_bound;
};

ExactInt sigma(const Factorization& f);
ExactRatio sigma_over_n(const Factorization& f);

/// Encloses ln n as sum k_j ln p_j.
RealInterval log_n(const Factorization& f, int precision_bits);

/// Throws RhsUndefined unless ln n is certified > 1 at this precision.
RealInterval robin_rhs(const Factorization& f, int precision_bits);

/// e^gamma * ln(x) for an enclosure x of ln n with x.lo > 1.
RealInterval robin_rhs_from_log(const RealInterval& ln_n, int precision_bits);

CheckResult check(const Factorization& f, const PrecisionConfig& cfg = {});
CheckResult check_n(const ExactInt& n, const PrecisionConfig& cfg = {});

}  // namespace robin
