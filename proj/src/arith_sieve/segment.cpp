#include "chebdense/segment.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chebdense/errors.hpp"

namespace chebdense {

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

std::vector<std::uint32_t> primes_up_to(u64 limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<char> composite(limit + 1, 0);
  for (u64 i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (u64 j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  for (u64 i = 2; i <= limit; ++i) {
    if (!composite[i]) primes.push_back(static_cast<std::uint32_t>(i));
  }
  return primes;
}

namespace {

bool is_prime_trial(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_base_primes(std::span<const std::uint32_t> primes, u64 root) {
  const u64 largest = primes.empty() ? 1 : primes.back();
  if (largest >= root) return;
  for (u64 q = largest + 1; q <= root; ++q) {
    if (is_prime_trial(q)) {
      throw MissingPrimesError("prime list stops at " + std::to_string(largest) +
                               " but segment needs " + std::to_string(q));
    }
  }
}

}  // namespace

void build_segment_into(Segment& seg, u64 lo, u64 hi, std::span<const std::uint32_t> primes,
                        int m) {
  require_valid_m(m);
  if (lo < 2 || hi < lo) {
    throw PreconditionError("segment bounds need 2 <= lo <= hi, got [" + std::to_string(lo) +
                            ", " + std::to_string(hi) + "]");
  }
  if (hi > kMaxSegmentValue) {
    throw PreconditionError("segment end " + std::to_string(hi) + " exceeds 2^32 - 1");
  }
  const u64 root = isqrt(hi);
  require_base_primes(primes, root);

  seg.lo_ = lo;
  seg.hi_ = hi;
  seg.m_ = m;
  const u64 len = hi - lo + 1;
  if (seg.cells_.size() < len) seg.cells_.resize(len);
  SegmentCell* cells = seg.cells_.data();
  for (u64 i = 0; i < len; ++i) {
    cells[i] = SegmentCell{static_cast<std::uint32_t>(lo + i), 0, 1, 1, 1, 1, 0};
  }

  const auto um = static_cast<std::uint32_t>(m);
  for (const std::uint32_t p : primes) {
    if (p > root) break;
    u64 first = (lo + p - 1) / p * p;
    for (u64 j = first; j <= hi; j += p) {
      SegmentCell& c = cells[j - lo];
      std::uint32_t r = c.residual / p;
      std::uint32_t e = 1;
      while (r % p == 0) {
        r /= p;
        ++e;
      }
      c.residual = r;
      if (c.spf == 0) c.spf = p;
      c.big_p = p;
      c.big_omega = static_cast<std::uint8_t>(c.big_omega + e);
      c.mu = e >= 2 ? 0 : static_cast<std::int8_t>(-c.mu);
      const std::uint32_t rem = e % um;
      if (rem != 0) {
        c.big_p_m = p;
        c.lambda = rem >= 2 ? 0 : static_cast<std::int8_t>(-c.lambda);
      }
    }
  }

  // Whatever remains above 1 is a single prime > sqrt(hi) of exponent 1.
  for (u64 i = 0; i < len; ++i) {
    SegmentCell& c = cells[i];
    if (c.residual > 1) {
      if (c.spf == 0) c.spf = c.residual;
      c.big_p = c.residual;
      c.big_p_m = c.residual;
      c.big_omega = static_cast<std::uint8_t>(c.big_omega + 1);
      c.mu = static_cast<std::int8_t>(-c.mu);
      c.lambda = static_cast<std::int8_t>(-c.lambda);
    }
  }
}

Segment build_segment(u64 lo, u64 hi, std::span<const std::uint32_t> primes, int m) {
  Segment seg;
  build_segment_into(seg, lo, hi, primes, m);
  return seg;
}

}  // namespace chebdense
