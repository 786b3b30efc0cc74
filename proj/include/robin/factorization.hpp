#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "robin/arith.hpp"

namespace robin {

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint64_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = p_1^k_1 * ... * p_m^k_m with p_1 < ... < p_m and every k_j >= 1.
/// Primality of the bases is checked by the constructors that parse or
/// build from untrusted input, not here.
class Factorization {
 public:
  Factorization() = default;
  /// Entries must already be strictly ascending with positive exponents.
  explicit Factorization(std::vector<PrimePower> entries);
  Factorization(std::initializer_list<PrimePower> entries)
      : Factorization(std::vector<PrimePower>(entries)) {}

  /// Sorts by prime; rejects duplicates and zero exponents.
  static Factorization from_unsorted(std::vector<PrimePower> entries);

  std::span<const PrimePower> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const PrimePower& operator[](std::size_t i) const { return entries_[i]; }

  /// The integer itself; cost grows with log n.
  ExactInt value() const;

  /// True when n > bound, without materializing more of n than needed.
  bool exceeds(std::uint64_t bound) const;

  /// Upper bound on log2 n (sum of k_j * bit_length(p_j)).
  std::uint64_t log2_upper_bound() const;

  /// Canonical "2^4*3^2*5*7" form; exponent 1 is omitted.
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> entries_;
};

}  // namespace robin
