#include <doctest.h>

#include "chebdense/errors.hpp"
#include "chebdense/segment.hpp"
#include "support/brute.hpp"

using namespace chebdense;

namespace {

// Every stored field against the whole-range table derivations.
u64 mismatches_against_table(const Segment& seg, const SpfTable& table, int m) {
  u64 bad = 0;
  for (u64 n = seg.lo(); n <= seg.hi(); ++n) {
    const Factorization f = factorize(n, table);
    const bool same = seg.spf(n) == table[n] && seg.lambda(n) == lambda_m_of(f, m) &&
                      seg.mu(n) == mu_of(f) && seg.big_omega(n) == big_omega_of(f) &&
                      seg.big_p(n) == big_p_of(f) && seg.big_p_m(n) == big_p_m_of(f, m);
    if (!same) ++bad;
  }
  return bad;
}

}  // namespace

TEST_SUITE("segment") {

TEST_CASE("isqrt and primes_up_to") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(15) == 3);
  CHECK(isqrt(16) == 4);
  CHECK(isqrt(UINT64_MAX) == 0xFFFFFFFFull);
  CHECK(isqrt((u64{1} << 62) - 1) == (u64{1} << 31) - 1);
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(30) == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("segment [2, 100] equals the whole-range derivations") {
  const SpfTable table = build_spf(100);
  const auto primes = primes_up_to(10);
  for (int m = 2; m <= 5; ++m) {
    const Segment seg = build_segment(2, 100, primes, m);
    CHECK(seg.size() == 99);
    CHECK(mismatches_against_table(seg, table, m) == 0);
  }
}

TEST_CASE("segment above 1e6 matches the whole-range sieve") {
  const u64 lo = 1000000;
  const u64 hi = 1010000;
  const SpfTable table = build_spf(hi);
  const auto primes = primes_up_to(isqrt(hi));
  for (int m : {2, 3}) {
    const Segment seg = build_segment(lo, hi, primes, m);
    CHECK(mismatches_against_table(seg, table, m) == 0);
  }
}

TEST_CASE("single-element segments match factorize") {
  const SpfTable table = build_spf(5000);
  const auto primes = primes_up_to(100);
  for (u64 n : {2ull, 3ull, 4ull, 64ull, 97ull, 360ull, 1024ull, 4913ull, 4999ull}) {
    const Segment seg = build_segment(n, n, primes, 3);
    CHECK(seg.size() == 1);
    CHECK(mismatches_against_table(seg, table, 3) == 0);
  }
}

TEST_CASE("segments near 2^32 keep large prime factors") {
  const u64 hi = kMaxSegmentValue;
  const u64 lo = hi - 2000;
  const auto primes = primes_up_to(isqrt(hi));
  const Segment seg = build_segment(lo, hi, primes, 2);
  u64 bad = 0;
  for (u64 n = lo; n <= hi; n += 37) {
    if (seg.spf(n) != brute::smallest_prime(n) || seg.big_p(n) != brute::largest_prime(n) ||
        seg.big_p_m(n) != brute::largest_prime_off_multiple(n, 2) ||
        seg.lambda(n) != brute::lambda(n, 2)) {
      ++bad;
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("build_segment preconditions") {
  const auto primes = primes_up_to(10);
  CHECK_THROWS_AS(build_segment(1, 10, primes, 2), PreconditionError);
  CHECK_THROWS_AS(build_segment(20, 10, primes, 2), PreconditionError);
  CHECK_THROWS_AS(build_segment(2, 100, primes, 1), PreconditionError);
  CHECK_THROWS_AS(build_segment(2, kMaxSegmentValue + 1, primes_up_to(70000), 2),
                  PreconditionError);
  // 11 and 13 are missing for hi = 200.
  CHECK_THROWS_AS(build_segment(100, 200, primes, 2), MissingPrimesError);
}

TEST_CASE("build_segment_into reuses storage") {
  const SpfTable table = build_spf(3000);
  const auto primes = primes_up_to(60);
  Segment seg;
  build_segment_into(seg, 1000, 3000, primes, 2);
  build_segment_into(seg, 50, 120, primes, 4);
  CHECK(seg.lo() == 50);
  CHECK(seg.size() == 71);
  CHECK(seg.m() == 4);
  CHECK(mismatches_against_table(seg, table, 4) == 0);
}

}  // TEST_SUITE
