#include "robin/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <thread>

#include "robin/primes.hpp"
#include "series.hpp"

namespace robin {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Runs job(i) for i in [0, count) on up to `workers` threads and hands the
// results to deliver(i, result) on the calling thread in ascending i.
template <typename Result, typename Job, typename Deliver>
void ordered_parallel(std::size_t count, unsigned workers, Job job, Deliver deliver) {
  workers = static_cast<unsigned>(std::min<std::size_t>(std::max(workers, 1U), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) deliver(i, job(i));
    return;
  }
  std::vector<std::optional<Result>> slots(count);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;

  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      while (!stop) {
        const std::size_t i = next++;
        if (i >= count) return;
        try {
          Result r = job(i);
          std::lock_guard lock(mu);
          slots[i] = std::move(r);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!error) error = std::current_exception();
          stop = true;
        }
        cv.notify_all();
      }
    });
  }
  for (std::size_t i = 0; i < count; ++i) {
    std::optional<Result> r;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return slots[i].has_value() || error; });
      if (error) break;
      r = std::move(slots[i]);
      slots[i].reset();
    }
    try {
      deliver(i, std::move(*r));
    } catch (...) {
      stop = true;
      throw;
    }
  }
  stop = true;
  pool.clear();
  if (error) std::rethrow_exception(error);
}

u64 isqrt(u64 n) {
  auto r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<u128> sigma_block_with(u64 lo, u64 hi, const std::vector<u64>& primes) {
  const std::size_t len = hi - lo + 1;
  std::vector<u64> rest(len);
  std::vector<u128> sig(len, 1);
  for (std::size_t i = 0; i < len; ++i) rest[i] = lo + i;
  const u64 root = isqrt(hi);
  for (const u64 p : primes) {
    if (p > root) break;
    for (u64 j = (lo + p - 1) / p * p; j <= hi && j >= lo; j += p) {
      const std::size_t i = j - lo;
      u128 term = 1;
      u128 sum = 1;
      while (rest[i] % p == 0) {
        rest[i] /= p;
        term *= p;
        sum += term;
      }
      sig[i] *= sum;
      if (hi - j < p) break;
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (rest[i] > 1) sig[i] *= static_cast<u128>(rest[i]) + 1;  // leftover prime factor
  }
  return sig;
}

ExactInt to_exact(u128 v) {
  ExactInt r;
  mpz_import(r.get_mpz_t(), 2, -1, sizeof(u64), 0, 0, &v);
  return r;
}

constexpr u64 kBlock = u64{1} << 16;
constexpr u64 kChunk = 1024;
constexpr int kThresholdScale = 40;

// floor(2^40 * L) for a certified lower bound L of e^gamma ln ln n, or 0
// when n is too small for a positive bound.
u128 scaled_rhs_floor(u64 n) {
  if (n < 16) return 0;
  const RealInterval ln_n = ln_interval(ExactRatio(to_exact(n)), 53);
  const RealInterval rhs = robin_rhs_from_log(ln_n, 53);
  const ExactInt f = rhs.lo().floor_scaled(kThresholdScale);
  return f > 0 ? static_cast<u128>(f.get_ui()) : 0;
}

struct BlockResult {
  std::vector<ScanViolation> violations;
  std::vector<u64> indeterminates;
  u64 checked = 0;
  u64 satisfied = 0;
};

}  // namespace

std::vector<unsigned __int128> sigma_block(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 1 || hi < lo) throw Error(ErrorCode::InvalidRange, "sigma_block needs 1 <= lo <= hi");
  const auto table = PrimeSource::shared().up_to(std::max<u64>(isqrt(hi), 2));
  return sigma_block_with(lo, hi, table->primes);
}

ScanReport scan_range(std::uint64_t lo, std::uint64_t hi, const PrecisionConfig& cfg,
                      unsigned worker_count, const ViolationSink& on_violation) {
  if (lo < 2 || hi < lo) throw Error(ErrorCode::InvalidRange, "scan needs 2 <= lo <= hi");
  if (hi > (u64{1} << 62)) throw Error(ErrorCode::InputTooLarge, "scan range beyond 2^62");
  cfg.validate();
  const auto table = PrimeSource::shared().up_to(std::max<u64>(isqrt(hi), 2));
  const std::size_t blocks = static_cast<std::size_t>((hi - lo) / kBlock + 1);

  auto job = [&](std::size_t b) {
    const u64 a = lo + b * kBlock;
    const u64 z = std::min(hi, a + (kBlock - 1));
    const std::vector<u128> sig = sigma_block_with(a, z, table->primes);
    BlockResult out;
    for (u64 c = a; c <= z; c += kChunk) {
      const u64 c_end = std::min(z, c + (kChunk - 1));
      const u128 bound = scaled_rhs_floor(c);
      for (u64 n = c; n <= c_end; ++n) {
        ++out.checked;
        // sigma/n < bound / 2^40 <= rhs(c) <= rhs(n)
        if (bound > 0 && (sig[n - a] << kThresholdScale) < static_cast<u128>(n) * bound) {
          ++out.satisfied;
          continue;
        }
        CheckResult r = check(factorize(n), cfg);
        switch (r.verdict) {
          case Verdict::Satisfied: ++out.satisfied; break;
          case Verdict::Violated: out.violations.push_back({n, std::move(r)}); break;
          case Verdict::Indeterminate: out.indeterminates.push_back(n); break;
        }
      }
    }
    return out;
  };

  ScanReport report;
  report.lo = lo;
  report.hi = hi;
  ordered_parallel<BlockResult>(blocks, worker_count, job, [&](std::size_t, BlockResult r) {
    report.checked_count += r.checked;
    report.satisfied_count += r.satisfied;
    for (auto& v : r.violations) {
      if (on_violation) on_violation(v);
      report.violations.push_back(std::move(v));
    }
    report.indeterminates.insert(report.indeterminates.end(), r.indeterminates.begin(),
                                 r.indeterminates.end());
  });
  return report;
}

// ------------------------------------------------------------ q_m vs alpha_m

void for_each_conjecture_row(std::size_t m_max, const PrecisionConfig& cfg, const RowSink& sink) {
  if (m_max == 0) throw Error(ErrorCode::DomainError, "table needs m_max >= 1");
  cfg.validate();
  const auto table = PrimeSource::shared().first(m_max);
  const int bits = cfg.start_bits;

  std::int64_t weight = 0;
  for (std::size_t i = 0; i < m_max; ++i) weight += detail::bit_length(table->primes[i]) + 2;
  const std::int64_t w = detail::ln_working_scale(bits + 4, weight);
  const detail::LnEvaluator ln(w);

  ExactRatio q(1);
  ExactInt sum_lo = 0;
  ExactInt sum_hi = 0;
  u128 primorial = 1;
  for (std::size_t m = 1; m <= m_max; ++m) {
    const u64 p = table->primes[m - 1];
    q *= ExactRatio(ExactInt(static_cast<unsigned long>(p + 1)), ExactInt(static_cast<unsigned long>(p)));
    const detail::FixedEnclosure e = ln.ln(p);
    sum_lo += e.lo;
    sum_hi += e.hi;
    if (primorial <= 5040) primorial *= p;

    ConjectureRow row;
    row.m = m;
    row.p_m = p;
    row.q_m = q;
    row.n_exceeds_5040 = primorial > 5040;
    const RealInterval ln_n = detail::FixedEnclosure{sum_lo, sum_hi, w}.to_interval(bits + 4);
    if (ln_n.lo() > Dyadic(1)) {
      row.alpha_m = robin_rhs_from_log(ln_n, bits);
      row.ratio = divide(*row.alpha_m, q, bits);
    }
    sink(row);
  }
}

std::vector<ConjectureRow> conjecture31_table(std::size_t m_max, const PrecisionConfig& cfg) {
  std::vector<ConjectureRow> rows;
  rows.reserve(m_max);
  for_each_conjecture_row(m_max, cfg, [&](const ConjectureRow& r) { rows.push_back(r); });
  return rows;
}

// ------------------------------------------------------ exponent increments

ProbeReport conjecture32_probe(const Factorization& f, const PrecisionConfig& cfg) {
  ProbeReport rep;
  rep.base = f;
  rep.base_result = check(f, cfg);
  if (rep.base_result.verdict != Verdict::Satisfied) {
    throw Error(ErrorCode::BaseNotSatisfied, f.to_string() + " does not satisfy the inequality");
  }
  if (!f.exceeds(5040)) throw Error(ErrorCode::BaseNotSatisfied, f.to_string() + " is not above 5040");
  for (std::size_t j = 0; j < f.size(); ++j) {
    std::vector<PrimePower> entries(f.entries().begin(), f.entries().end());
    ++entries[j].exponent;
    rep.increments.emplace_back(j, check(Factorization(std::move(entries)), cfg));
  }
  return rep;
}

namespace {

class CandidateWalker {
 public:
  CandidateWalker(const SearchOptions& o, const std::vector<u64>& primes) : o_(o), primes_(primes) {
    for (const u64 p : primes_) logs_.push_back(std::log(static_cast<double>(p)));
  }

  std::vector<Factorization> run() {
    std::vector<PrimePower> current;
    walk(0, o_.exponent_max, 0.0, current);
    return std::move(out_);
  }

 private:
  void emit(const std::vector<PrimePower>& current) {
    if (current.empty()) return;
    Factorization f(current);
    if (f.exceeds(5040)) out_.push_back(std::move(f));
  }

  // Position j chooses k_j; `cap` is k_{j-1} in non-increasing mode.
  void walk(std::size_t j, u64 cap, double log_n, std::vector<PrimePower>& current) {
    if (j == primes_.size()) {
      emit(current);
      return;
    }
    if (o_.non_increasing) {
      emit(current);  // stop here: the remaining exponents are zero
      for (u64 k = 1; k <= cap; ++k) {
        const double next = log_n + static_cast<double>(k) * logs_[j];
        if (next > o_.log_n_max) break;
        current.push_back({primes_[j], k});
        walk(j + 1, k, next, current);
        current.pop_back();
      }
      return;
    }
    walk(j + 1, cap, log_n, current);
    for (u64 k = 1; k <= o_.exponent_max; ++k) {
      const double next = log_n + static_cast<double>(k) * logs_[j];
      if (next > o_.log_n_max) break;
      current.push_back({primes_[j], k});
      walk(j + 1, cap, next, current);
      current.pop_back();
    }
  }

  const SearchOptions& o_;
  const std::vector<u64>& primes_;
  std::vector<double> logs_;
  std::vector<Factorization> out_;
};

}  // namespace

std::vector<Factorization> enumerate_candidates(const SearchOptions& options) {
  if (options.prime_count_max == 0) throw Error(ErrorCode::DomainError, "need at least one prime");
  if (options.exponent_max == 0) throw Error(ErrorCode::DomainError, "exponent_max must be >= 1");
  const auto table = PrimeSource::shared().first(options.prime_count_max);
  const std::vector<u64> primes(table->primes.begin(),
                                table->primes.begin() + static_cast<std::ptrdiff_t>(options.prime_count_max));
  return CandidateWalker(options, primes).run();
}

SearchReport conjecture32_search(const SearchOptions& options, const PrecisionConfig& cfg) {
  cfg.validate();
  const std::vector<Factorization> candidates = enumerate_candidates(options);

  struct Outcome {
    std::optional<CheckResult> unsatisfied;
    std::optional<ProbeReport> probe;
  };
  auto job = [&](std::size_t i) {
    Outcome out;
    CheckResult base = check(candidates[i], cfg);
    if (base.verdict != Verdict::Satisfied) {
      out.unsatisfied = std::move(base);
      return out;
    }
    out.probe = conjecture32_probe(candidates[i], cfg);
    return out;
  };

  SearchReport report;
  report.candidate_count = candidates.size();
  ordered_parallel<Outcome>(candidates.size(), options.worker_count, job, [&](std::size_t, Outcome o) {
    if (o.unsatisfied) {
      report.unsatisfied_bases.push_back(std::move(*o.unsatisfied));
      return;
    }
    ++report.probed_count;
    for (auto& [j, after] : o.probe->increments) {
      if (after.verdict != Verdict::Satisfied) {
        report.counterexamples.push_back({o.probe->base, j, std::move(after)});
      }
    }
  });
  return report;
}

}  // namespace robin
