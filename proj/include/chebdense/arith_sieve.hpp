#pragma once

// Whole-range arithmetic sieve: smallest-prime-factor tables and the
// multiplicative quantities derived from a factorization.
//
// This is the serial reference path. The streaming density driver uses the
// segmented kernel in segment.hpp and is checked against this one.

#include <cstdint>
#include <span>
#include <vector>

#include "chebdense/memory_budget.hpp"

namespace chebdense {

using u64 = std::uint64_t;

// Largest m accepted anywhere. For m >= 64 every n < 2^64 has all exponents
// below m, so lambda_m collapses to mu.
inline constexpr int kMaxM = 64;

// Throws PreconditionError unless 2 <= m <= kMaxM.
void require_valid_m(int m);

class SpfTable {
 public:
  SpfTable() = default;

  u64 limit() const { return limit_; }

  // Unchecked; 1 <= n <= limit().
  u64 operator[](u64 n) const { return spf_[n]; }

  // Throws OutOfRangeError for n == 0 or n > limit().
  u64 at(u64 n) const;

  // All primes <= limit() in increasing order.
  std::span<const std::uint32_t> primes() const { return primes_; }

 private:
  friend SpfTable build_spf(u64 limit, const MemoryBudget& budget);

  u64 limit_ = 0;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

// Linear sieve over [1, limit]; spf[1] = 1. Limit must stay below 2^32.
SpfTable build_spf(u64 limit, const MemoryBudget& budget);
SpfTable build_spf(u64 limit);

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical decomposition, primes strictly increasing. Empty iff n == 1.
struct Factorization {
  u64 n = 1;
  std::vector<PrimePower> factors;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

Factorization factorize(u64 n, const SpfTable& table);

// lambda_m from exponent residues: 0 if some exponent has residue >= 2 mod m,
// otherwise (-1)^(number of exponents with residue 1).
int lambda_m_of(const Factorization& f, int m);
int mu_of(const Factorization& f);
unsigned big_omega_of(const Factorization& f);

// Smallest prime divisor, with p(1) = 1.
u64 p_min(u64 n, const SpfTable& table);

// Largest prime whose exponent is not a multiple of m; 1 for perfect m-th powers.
u64 big_p_m_of(const Factorization& f, int m);

// Largest prime divisor, with P(1) = 1.
u64 big_p_of(const Factorization& f);

// Signed {-1, 0, +1} values indexed 1..limit (index 0 unused).
class ValueTable {
 public:
  ValueTable() = default;
  explicit ValueTable(u64 limit) : values_(limit + 1, 0) {}

  u64 limit() const { return values_.empty() ? 0 : values_.size() - 1; }
  int operator[](u64 n) const { return values_[n]; }
  void set(u64 n, int v) { values_[n] = static_cast<std::int8_t>(v); }
  std::span<const std::int8_t> raw() const { return values_; }

  // Copy restricted to [1, limit].
  ValueTable prefix(u64 limit) const;

 private:
  std::vector<std::int8_t> values_;
};

ValueTable build_mu_table(const SpfTable& table);
ValueTable build_lambda_table(const SpfTable& table, int m);

}  // namespace chebdense
