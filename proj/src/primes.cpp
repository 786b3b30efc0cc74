#include "robin/primes.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>

namespace robin {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 isqrt(u64 n) {
  auto r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<u64> simple_sieve(u64 limit) {
  std::vector<u64> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 b, u64 e, u64 m) {
  u64 r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Brent's variant of Pollard rho; n must be an odd composite.
u64 rho_split(u64 n) {
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
    u64 y = 2;
    u64 x = 2;
    u64 g = 1;
    u64 q = 1;
    u64 ys = 2;
    const u64 m = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const u64 d = rho_split(n);
  split_into(d, out);
  split_into(n / d, out);
}

constexpr u64 kTrialBound = 1'000'000;

}  // namespace

PrimeTable sieve(std::uint64_t limit, const SieveOptions& options) {
  if (limit < 2) throw Error(ErrorCode::DomainError, "sieve limit must be >= 2");
  if (limit > options.max_limit) {
    throw Error(ErrorCode::LimitTooLarge,
                "sieve limit " + std::to_string(limit) + " exceeds budget " +
                    std::to_string(options.max_limit));
  }
  const u64 segment = std::max<u64>(options.segment_size, 64);
  const std::vector<u64> base = simple_sieve(isqrt(limit));

  PrimeTable table;
  table.limit = limit;
  std::vector<char> alive;
  for (u64 lo = 2; lo <= limit; lo += segment) {
    const u64 hi = std::min(limit, lo + segment - 1);
    alive.assign(hi - lo + 1, 1);
    for (const u64 p : base) {
      if (p * p > hi) break;
      u64 start = std::max(p * p, (lo + p - 1) / p * p);
      for (u64 j = start; j <= hi; j += p) alive[j - lo] = 0;
    }
    for (u64 i = 0; i < alive.size(); ++i) {
      if (alive[i]) table.primes.push_back(lo + i);
    }
    if (hi == limit) break;
  }
  return table;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (const u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // this witness set is deterministic below 3.3 * 10^24
  for (const u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeSource& PrimeSource::shared() {
  static PrimeSource source;
  return source;
}

std::shared_ptr<const PrimeTable> PrimeSource::up_to(std::uint64_t limit) {
  std::lock_guard lock(mutex_);
  if (table_->limit >= limit) return table_;
  const u64 target = std::max<u64>({limit, 2 * table_->limit, 1 << 16});
  table_ = std::make_shared<const PrimeTable>(sieve(target));
  return table_;
}

std::shared_ptr<const PrimeTable> PrimeSource::first(std::size_t count) {
  {
    std::lock_guard lock(mutex_);
    if (table_->primes.size() >= count) return table_;
  }
  // p_n < n (ln n + ln ln n) for n >= 6
  const double n = static_cast<double>(std::max<std::size_t>(count, 6));
  const auto bound = static_cast<u64>(n * (std::log(n) + std::log(std::log(n)))) + 16;
  return up_to(bound);
}

std::uint64_t nth_prime(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::DomainError, "prime index is 1-based");
  return PrimeSource::shared().first(m)->primes[m - 1];
}

Factorization primorial_factorization(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::DomainError, "primorial needs m >= 1");
  const auto table = PrimeSource::shared().first(m);
  std::vector<PrimePower> entries;
  entries.reserve(m);
  for (std::size_t i = 0; i < m; ++i) entries.push_back({table->primes[i], 1});
  return Factorization(std::move(entries));
}

Factorization factorize(std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::DomainError, "factorize needs n >= 2");
  std::vector<PrimePower> entries;
  const auto table = PrimeSource::shared().up_to(kTrialBound);
  bool checked_prime = false;
  for (const u64 p : table->primes) {
    if (p * p > n) break;
    if (!checked_prime && p > 1000) {
      if (is_prime(n)) break;
      checked_prime = true;
    }
    if (n % p != 0) continue;
    u64 k = 0;
    do {
      n /= p;
      ++k;
    } while (n % p == 0);
    entries.push_back({p, k});
  }
  if (n > 1) {
    std::vector<u64> rest;
    split_into(n, rest);
    std::sort(rest.begin(), rest.end());
    for (const u64 p : rest) {
      if (!entries.empty() && entries.back().prime == p) {
        ++entries.back().exponent;
      } else {
        entries.push_back({p, 1});
      }
    }
  }
  return Factorization(std::move(entries));
}

Factorization factorize(const ExactInt& n) {
  if (n < 2) throw Error(ErrorCode::DomainError, "factorize needs n >= 2");
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64) {
    throw Error(ErrorCode::InputTooLarge,
                "n exceeds the 64-bit factoring range; supply a factor string instead");
  }
  u64 v = 0;
  mpz_export(&v, nullptr, -1, sizeof v, 0, 0, n.get_mpz_t());
  return factorize(v);
}

namespace {

class FactorParser {
 public:
  explicit FactorParser(std::string_view s) : s_(s) {}

  Factorization parse() {
    std::vector<PrimePower> entries;
    skip_ws();
    if (at_end()) fail("empty factor string");
    for (;;) {
      PrimePower term;
      term.prime = number();
      skip_ws();
      term.exponent = 1;
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        term.exponent = number();
        skip_ws();
      }
      if (term.exponent == 0) throw Error(ErrorCode::ZeroExponent, "zero exponent on " + std::to_string(term.prime));
      if (!is_prime(term.prime)) throw Error(ErrorCode::NotPrime, std::to_string(term.prime) + " is not prime");
      entries.push_back(term);
      if (at_end()) break;
      if (peek() != '*') fail("expected '*'");
      ++pos_;
      skip_ws();
    }
    return Factorization::from_unsorted(std::move(entries));
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_));
  }

  u64 number() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    u64 v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      const u64 d = static_cast<u64>(s_[pos_] - '0');
      if (v > (std::numeric_limits<u64>::max() - d) / 10) {
        throw Error(ErrorCode::InputTooLarge, "integer in factor string exceeds 64 bits");
      }
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Factorization parse_factor_string(std::string_view s) { return FactorParser(s).parse(); }

}  // namespace robin
