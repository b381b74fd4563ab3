#pragma once

// Segmented sieve over a window [lo, hi]. Each index carries enough state to
// reproduce what the whole-range path derives from spf: p(n), P(n), P_m(n),
// Omega(n), mu(n) and lambda_m(n), without a table reaching up to hi.

#include <cstdint>
#include <span>
#include <vector>

#include "chebdense/arith_sieve.hpp"

namespace chebdense {

inline constexpr u64 kDefaultSegmentSize = u64{1} << 22;

// Segment values are stored in 32 bits.
inline constexpr u64 kMaxSegmentValue = 0xFFFFFFFFull;

struct SegmentCell {
  std::uint32_t residual;  // n with every prime <= sqrt(hi) divided out
  std::uint32_t spf;
  std::uint32_t big_p;
  std::uint32_t big_p_m;
  std::int8_t lambda;
  std::int8_t mu;
  std::uint8_t big_omega;
};

class Segment {
 public:
  Segment() = default;

  u64 lo() const { return lo_; }
  u64 hi() const { return hi_; }
  int m() const { return m_; }
  u64 size() const { return hi_ - lo_ + 1; }

  // n in [lo, hi]; unchecked.
  const SegmentCell& cell(u64 n) const { return cells_[n - lo_]; }
  std::span<const SegmentCell> cells() const { return {cells_.data(), size()}; }

  u64 spf(u64 n) const { return cell(n).spf; }
  u64 big_p(u64 n) const { return cell(n).big_p; }
  u64 big_p_m(u64 n) const { return cell(n).big_p_m; }
  int lambda(u64 n) const { return cell(n).lambda; }
  int mu(u64 n) const { return cell(n).mu; }
  unsigned big_omega(u64 n) const { return cell(n).big_omega; }

  // Bytes held per index, for memory budgeting.
  static constexpr u64 bytes_per_index() { return sizeof(SegmentCell); }

 private:
  friend void build_segment_into(Segment&, u64, u64, std::span<const std::uint32_t>, int);

  u64 lo_ = 0;
  u64 hi_ = 0;
  int m_ = 2;
  std::vector<SegmentCell> cells_;
};

// Plain Eratosthenes, primes <= limit.
std::vector<std::uint32_t> primes_up_to(u64 limit);

// Floor square root, exact for all u64.
u64 isqrt(u64 n);

// `primes` must be sorted and contain every prime <= sqrt(hi); throws
// MissingPrimesError otherwise. Requires 2 <= lo <= hi <= kMaxSegmentValue.
Segment build_segment(u64 lo, u64 hi, std::span<const std::uint32_t> primes, int m);

// Same, reusing the storage already held by `seg`.
void build_segment_into(Segment& seg, u64 lo, u64 hi, std::span<const std::uint32_t> primes,
                        int m);

}  // namespace chebdense
