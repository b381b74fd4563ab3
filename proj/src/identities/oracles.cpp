#include "chebdense/errors.hpp"
#include "chebdense/identities.hpp"

namespace chebdense::oracle {

std::vector<PrimePower> trial_factor(u64 n) {
  std::vector<PrimePower> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

int mu(u64 n) {
  int sign = 1;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

namespace {

// d^m, or 0 once it exceeds `cap`.
u64 bounded_power(u64 d, int m, u64 cap) {
  u64 v = 1;
  for (int i = 0; i < m; ++i) {
    if (v > cap / d) return 0;
    v *= d;
  }
  return v;
}

}  // namespace

int lambda_brute(u64 n, int m) {
  int total = 0;
  for (u64 d = 1;; ++d) {
    const u64 dm = bounded_power(d, m, n);
    if (dm == 0) break;
    if (n % dm == 0) total += mu(n / dm);
  }
  return total;
}

unsigned big_omega(u64 n) {
  unsigned total = 0;
  for (const auto& pe : trial_factor(n)) total += pe.exponent;
  return total;
}

u64 smallest_prime(u64 n) {
  if (n == 1) return 1;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

u64 largest_prime_not_mth_power(u64 n, int m) {
  u64 best = 1;
  for (const auto& pe : trial_factor(n)) {
    if (pe.exponent % static_cast<unsigned>(m) != 0) best = pe.prime;
  }
  return best;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

bool is_perfect_power(u64 n, int m) {
  for (u64 d = 1;; ++d) {
    const u64 dm = bounded_power(d, m, n);
    if (dm == 0 || dm > n) return false;
    if (dm == n) return true;
  }
}

bool is_prime(u64 n) { return n >= 2 && smallest_prime(n) == n; }

}  // namespace chebdense::oracle
