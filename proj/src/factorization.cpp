#include "robin/factorization.hpp"

#include <algorithm>
#include <bit>

namespace robin {

Factorization::Factorization(std::vector<PrimePower> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].exponent == 0) throw Error(ErrorCode::ZeroExponent, "exponent must be >= 1");
    if (entries_[i].prime < 2) throw Error(ErrorCode::NotPrime, "base must be >= 2");
    if (i > 0 && entries_[i - 1].prime >= entries_[i].prime) {
      throw Error(ErrorCode::DomainError, "factorization bases must be strictly ascending");
    }
  }
}

Factorization Factorization::from_unsorted(std::vector<PrimePower> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i - 1].prime == entries[i].prime) {
      throw Error(ErrorCode::DuplicateBase, "duplicate base " + std::to_string(entries[i].prime));
    }
  }
  return Factorization(std::move(entries));
}

ExactInt Factorization::value() const {
  ExactInt n = 1;
  ExactInt t;
  for (const auto& [p, k] : entries_) {
    mpz_ui_pow_ui(t.get_mpz_t(), p, k);
    n *= t;
  }
  return n;
}

bool Factorization::exceeds(std::uint64_t bound) const {
  unsigned __int128 n = 1;
  for (const auto& [p, k] : entries_) {
    for (std::uint64_t i = 0; i < k; ++i) {
      n *= p;
      if (n > bound) return true;
    }
  }
  return false;
}

std::uint64_t Factorization::log2_upper_bound() const {
  std::uint64_t total = 0;
  for (const auto& [p, k] : entries_) total += k * static_cast<std::uint64_t>(std::bit_width(p));
  return total;
}

std::string Factorization::to_string() const {
  std::string out;
  for (const auto& [p, k] : entries_) {
    if (!out.empty()) out += '*';
    out += std::to_string(p);
    if (k != 1) {
      out += '^';
      out += std::to_string(k);
    }
  }
  return out;
}

}  // namespace robin
