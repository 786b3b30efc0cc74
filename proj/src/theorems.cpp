#include "robin/theorems.hpp"

#include <algorithm>
#include <tuple>

#include "robin/primes.hpp"

namespace robin {

ExactRatio prime_power_lhs(std::uint64_t p, std::uint64_t k) {
  if (k == 0) throw Error(ErrorCode::ZeroExponent, "exponent must be >= 1");
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  return sigma_over_n(Factorization{{p, k}});
}

std::vector<CheckResult> verify_prime_powers(std::uint64_t limit, const PrecisionConfig& cfg) {
  if (limit <= 5040) throw Error(ErrorCode::DomainError, "prime-power sweep needs limit > 5040");
  cfg.validate();
  const auto table = PrimeSource::shared().up_to(limit);

  std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> powers;  // (n, p, k)
  for (const std::uint64_t p : table->primes) {
    if (p > limit) break;
    unsigned __int128 n = p;
    for (std::uint64_t k = 1; n <= limit; ++k, n *= p) {
      if (n > 5040) powers.emplace_back(static_cast<std::uint64_t>(n), p, k);
    }
  }
  std::sort(powers.begin(), powers.end());

  std::vector<CheckResult> out;
  out.reserve(powers.size());
  for (const auto& [n, p, k] : powers) out.push_back(check(Factorization{{p, k}}, cfg));
  return out;
}

Factorization substitute_prime(const Factorization& f, std::size_t index, std::uint64_t new_prime) {
  if (index >= f.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(index) + " outside factorization");
  }
  if (!is_prime(new_prime)) throw Error(ErrorCode::NotPrime, std::to_string(new_prime) + " is not prime");
  if (new_prime <= f[index].prime) {
    throw Error(ErrorCode::NotAnIncrease, "replacement prime must exceed " + std::to_string(f[index].prime));
  }
  std::vector<PrimePower> entries(f.entries().begin(), f.entries().end());
  for (const auto& e : entries) {
    if (e.prime == new_prime) {
      throw Error(ErrorCode::CollidingBase, std::to_string(new_prime) + " is already a base");
    }
  }
  entries[index].prime = new_prime;
  return Factorization::from_unsorted(std::move(entries));
}

SubstitutionReport substitution_report(const Factorization& f, std::size_t index,
                                       std::uint64_t new_prime, const PrecisionConfig& cfg) {
  SubstitutionReport rep;
  const Factorization g = substitute_prime(f, index, new_prime);
  rep.before = check(f, cfg);
  if (rep.before.verdict == Verdict::Indeterminate) {
    throw Error(ErrorCode::IndeterminateBase, "base check is indeterminate at max precision");
  }
  rep.after = check(g, cfg);
  rep.index = index;
  rep.old_prime = f[index].prime;
  rep.new_prime = new_prime;
  rep.lhs_decreased = rep.after.lhs < rep.before.lhs;

  for (std::int64_t bits = cfg.start_bits;;) {
    const int b = static_cast<int>(bits);
    if (log_n(g, b).certainly_greater(log_n(f, b))) {
      rep.rhs_increased = true;
      break;
    }
    if (bits >= cfg.max_bits) break;
    bits = std::min<std::int64_t>(bits * cfg.escalation_factor, cfg.max_bits);
  }
  return rep;
}

RealInterval threshold_5040(int precision_bits) {
  static const Factorization n5040{{2, 4}, {3, 2}, {5, 1}, {7, 1}};
  return robin_rhs(n5040, precision_bits);
}

namespace {

template <typename Factor>
BoundReport first_primes_bound(std::size_t m, int precision_bits, Factor factor) {
  if (m == 0) throw Error(ErrorCode::DomainError, "bound needs m >= 1");
  const auto table = PrimeSource::shared().first(m);
  ExactRatio value(1);
  for (std::size_t i = 0; i < m; ++i) value *= factor(table->primes[i]);
  RealInterval threshold = threshold_5040(precision_bits);
  const bool passes = compare(value, threshold) == Ordering::Less;
  return {m, table->primes[m - 1], std::move(value), std::move(threshold), passes};
}

ExactInt big(std::uint64_t v) { return static_cast<unsigned long>(v); }

}  // namespace

BoundReport unbounded_exponent_bound(std::size_t m, int precision_bits) {
  return first_primes_bound(m, precision_bits,
                            [](std::uint64_t p) { return ExactRatio(big(p), big(p - 1)); });
}

BoundReport squarefree_bound(std::size_t m, int precision_bits) {
  return first_primes_bound(m, precision_bits,
                            [](std::uint64_t p) { return ExactRatio(big(p + 1), big(p)); });
}

}  // namespace robin
