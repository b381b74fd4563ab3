#include <cmath>
#include <limits>
#include <string>

#include "chebdense/arith_sieve.hpp"
#include "chebdense/errors.hpp"

namespace chebdense {

void require_valid_m(int m) {
  if (m < 2 || m > kMaxM) {
    throw PreconditionError("m must lie in [2, " + std::to_string(kMaxM) + "], got " +
                            std::to_string(m));
  }
}

u64 SpfTable::at(u64 n) const {
  if (n == 0 || n > limit_) {
    throw OutOfRangeError("n = " + std::to_string(n) + " outside spf table [1, " +
                          std::to_string(limit_) + "]");
  }
  return spf_[n];
}

SpfTable build_spf(u64 limit, const MemoryBudget& budget) {
  if (limit == 0) throw PreconditionError("spf table limit must be >= 1");
  if (limit >= std::numeric_limits<std::uint32_t>::max()) {
    throw CapacityError("spf table limit must stay below 2^32");
  }
  // Table plus a pi(N) upper bound of 1.26 N / ln N prime slots.
  const double logn = std::log(static_cast<double>(std::max<u64>(limit, 3)));
  const u64 prime_slots = static_cast<u64>(1.26 * static_cast<double>(limit) / logn) + 8;
  budget.require((limit + 1 + prime_slots) * sizeof(std::uint32_t), "spf table");

  SpfTable t;
  t.limit_ = limit;
  t.spf_.assign(limit + 1, 0);
  t.spf_[1] = 1;
  t.primes_.reserve(prime_slots);
  for (u64 i = 2; i <= limit; ++i) {
    if (t.spf_[i] == 0) {
      t.spf_[i] = static_cast<std::uint32_t>(i);
      t.primes_.push_back(static_cast<std::uint32_t>(i));
    }
    const u64 si = t.spf_[i];
    for (std::uint32_t p : t.primes_) {
      if (p > si || p * i > limit) break;
      t.spf_[p * i] = p;
    }
  }
  return t;
}

SpfTable build_spf(u64 limit) { return build_spf(limit, MemoryBudget::from_env()); }

}  // namespace chebdense
