#pragma once

// Test-local oracles: trial division, divisor enumeration and exhaustive root
// counting. Nothing here calls into the library.

#include <cstdint>
#include <utility>
#include <vector>

namespace brute {

using u64 = std::uint64_t;

inline std::vector<std::pair<u64, unsigned>> factor(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline u64 smallest_prime(u64 n) {
  if (n == 1) return 1;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

inline int mu(u64 n) {
  int sign = 1;
  for (auto [p, e] : factor(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

inline unsigned big_omega(u64 n) {
  unsigned total = 0;
  for (auto [p, e] : factor(n)) total += e;
  return total;
}

inline u64 ipow(u64 b, unsigned e) {
  u64 v = 1;
  while (e-- > 0) v *= b;
  return v;
}

// Divisor-sum definition: sum over d with d^m | n of mu(n / d^m).
inline int lambda(u64 n, int m) {
  int total = 0;
  for (u64 d = 1; ipow(d, static_cast<unsigned>(m)) <= n; ++d) {
    const u64 dm = ipow(d, static_cast<unsigned>(m));
    if (n % dm == 0) total += mu(n / dm);
  }
  return total;
}

inline u64 largest_prime(u64 n) {
  const auto f = factor(n);
  return f.empty() ? 1 : f.back().first;
}

inline u64 largest_prime_off_multiple(u64 n, int m) {
  u64 best = 1;
  for (auto [p, e] : factor(n)) {
    if (e % static_cast<unsigned>(m) != 0) best = p;
  }
  return best;
}

inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

// Roots of x^3 - 2 in F_p by exhaustive search.
inline unsigned cube_root_count(u64 p) {
  unsigned c = 0;
  for (u64 x = 0; x < p; ++x) {
    if ((x * x % p) * x % p == 2 % p) ++c;
  }
  return c;
}

// S3 class of p >= 5 for x^3 - 2 from its root count: 0 identity,
// 1 transpositions, 2 3-cycles.
inline int s3_class(u64 p) {
  switch (cube_root_count(p)) {
    case 3: return 0;
    case 1: return 1;
    default: return 2;
  }
}

inline u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    const u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Smallest e >= 1 with a^e = 1 mod k, by repeated multiplication.
inline u64 order(u64 a, u64 k) {
  u64 v = a % k;
  u64 e = 1;
  while (v != 1 % k) {
    v = v * a % k;
    ++e;
  }
  return e;
}

}  // namespace brute
