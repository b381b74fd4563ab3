#include <numeric>

#include <omp.h>

#include "chebdense/errors.hpp"
#include "chebdense/identities.hpp"

namespace chebdense {

namespace {

std::string mismatch(long long expected, long long actual) {
  return "expected " + std::to_string(expected) + ", got " + std::to_string(actual);
}

bool precedes(const Counterexample& a, const Counterexample& b) {
  return a.n != b.n ? a.n < b.n : a.m < b.m;
}

IdentityReport make_report(std::string name, u64 hi, std::vector<int> ms) {
  IdentityReport r;
  r.identity = std::move(name);
  r.lo = 1;
  r.hi = hi;
  r.m_values = std::move(ms);
  return r;
}

void require_f1_zero(const FunctionHandle& f) {
  if (f(1) != 0) {
    throw PreconditionError("function handle " + f.name() + " has f(1) = " +
                            std::to_string(f(1)) + ", duality needs f(1) = 0");
  }
}

int mu_prime_power(unsigned exponent) { return exponent == 0 ? 1 : (exponent == 1 ? -1 : 0); }

// -sum_{j <= j0} f(p_j) d_j(n), with d_j(n) counted directly from its
// definition: the number of d with d^m dividing p_j^(a_j - 1) p_{j+1}^a_{j+1}
// ... p_r^a_r, provided m divides a_1, ..., a_{j-1}.
std::int64_t remark_rhs(const std::vector<PrimePower>& factors, int m, const FunctionHandle& f,
                        RemarkIndexRule rule) {
  const auto um = static_cast<unsigned>(m);
  std::size_t j0 = factors.size();
  bool found = false;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (factors[j].exponent % um != 0) {
      j0 = j + 1;
      found = true;
      break;
    }
  }
  if (!found && rule == RemarkIndexRule::first_index) return 0;

  std::int64_t total = 0;
  for (std::size_t j = 0; j < j0; ++j) {
    bool earlier_divisible = true;
    for (std::size_t i = 0; i < j; ++i) earlier_divisible &= factors[i].exponent % um == 0;
    if (!earlier_divisible) continue;

    unsigned __int128 target = 1;
    for (unsigned e = 1; e < factors[j].exponent; ++e) target *= factors[j].prime;
    for (std::size_t i = j + 1; i < factors.size(); ++i) {
      for (unsigned e = 0; e < factors[i].exponent; ++e) target *= factors[i].prime;
    }
    std::int64_t count = 0;
    for (u64 d = 1;; ++d) {
      unsigned __int128 dm = 1;
      for (int k = 0; k < m && dm <= target; ++k) dm *= d;
      if (dm > target) break;
      if (target % dm == 0) ++count;
    }
    total += f(factors[j].prime) * count;
  }
  return -total;
}

}  // namespace

void IdentityReport::record_failure(u64 n, int m, std::string detail) {
  ++failures;
  Counterexample c{n, m, std::move(detail)};
  if (!first || precedes(c, *first)) first = std::move(c);
}

void IdentityReport::record_flag(u64 n, int m, std::string detail) {
  ++flagged;
  Counterexample c{n, m, std::move(detail)};
  if (!first_flagged || precedes(c, *first_flagged)) first_flagged = std::move(c);
}

void IdentityReport::merge(const IdentityReport& other) {
  failures += other.failures;
  if (other.first && (!first || precedes(*other.first, *first))) first = other.first;
  flagged += other.flagged;
  if (other.first_flagged && (!first_flagged || precedes(*other.first_flagged, *first_flagged))) {
    first_flagged = other.first_flagged;
  }
}

IdentitySides duality_eval(u64 n, int m, const FunctionHandle& f) {
  require_valid_m(m);
  require_f1_zero(f);
  IdentitySides s;
  for (u64 d : oracle::divisors(n)) {
    s.lhs += oracle::lambda_brute(d, m) * f(oracle::smallest_prime(d));
  }
  s.rhs = -f(oracle::largest_prime_not_mth_power(n, m));
  return s;
}

IdentitySides dual_remark_eval(u64 n, int m, const FunctionHandle& f, RemarkIndexRule rule) {
  require_valid_m(m);
  require_f1_zero(f);
  IdentitySides s;
  for (u64 d : oracle::divisors(n)) {
    s.lhs += oracle::lambda_brute(d, m) * f(oracle::largest_prime_not_mth_power(d, m));
  }
  s.rhs = remark_rhs(oracle::trial_factor(n), m, f, rule);
  return s;
}

IdentityReport check_lambda_oracle(const ValueTable& lambda, int m) {
  require_valid_m(m);
  const u64 limit = lambda.limit();
  IdentityReport report = make_report("lambda_sieve_vs_divisor_sum", limit, {m});
#pragma omp parallel
  {
    IdentityReport local;
#pragma omp for schedule(dynamic, 4096)
    for (u64 n = 1; n <= limit; ++n) {
      const int expected = oracle::lambda_brute(n, m);
      if (lambda[n] != expected) local.record_failure(n, m, mismatch(expected, lambda[n]));
    }
#pragma omp critical
    report.merge(local);
  }
  return report;
}

IdentityReport check_liouville(const ValueTable& lambda2) {
  const u64 limit = lambda2.limit();
  IdentityReport report = make_report("liouville_specialization", limit, {2});
#pragma omp parallel
  {
    IdentityReport local;
#pragma omp for schedule(dynamic, 4096)
    for (u64 n = 1; n <= limit; ++n) {
      const int expected = oracle::big_omega(n) % 2 == 0 ? 1 : -1;
      if (lambda2[n] != expected) local.record_failure(n, 2, mismatch(expected, lambda2[n]));
    }
#pragma omp critical
    report.merge(local);
  }
  return report;
}

IdentityReport check_multiplicativity(const ValueTable& lambda, int m) {
  const u64 limit = lambda.limit();
  IdentityReport report = make_report("multiplicativity", limit, {m});
  for (u64 a = 1; a <= limit; ++a) {
    for (u64 b = 1; b <= limit / a; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const int expected = lambda[a] * lambda[b];
      if (lambda[a * b] != expected) {
        report.record_failure(a * b, m,
                              "a=" + std::to_string(a) + " b=" + std::to_string(b) + ": " +
                                  mismatch(expected, lambda[a * b]));
      }
    }
  }
  return report;
}

IdentityReport check_squarefree_agreement(const ValueTable& mu, const ValueTable& lambda, int m) {
  const u64 limit = std::min(mu.limit(), lambda.limit());
  IdentityReport report = make_report("squarefree_agreement", limit, {m});
  for (u64 n = 1; n <= limit; ++n) {
    const int rhs = mu[n] * mu[n] * lambda[n];
    if (mu[n] != rhs) report.record_failure(n, m, mismatch(mu[n], rhs));
  }
  return report;
}

IdentityReport check_prime_power_rule(const ValueTable& lambda, int m) {
  const u64 limit = lambda.limit();
  IdentityReport report = make_report("prime_power_rule", limit, {m});
  for (u64 p = 2; p <= limit; ++p) {
    if (!oracle::is_prime(p)) continue;
    u64 q = p;
    for (unsigned a = 1;; ++a) {
      const int expected = mu_prime_power(a % static_cast<unsigned>(m));
      if (lambda[q] != expected) {
        report.record_failure(q, m,
                              std::to_string(p) + "^" + std::to_string(a) + ": " +
                                  mismatch(expected, lambda[q]));
      }
      if (q > limit / p) break;
      q *= p;
    }
  }
  return report;
}

IdentityReport check_partition_sum(const ValueTable& lambda, int m) {
  require_valid_m(m);
  const u64 limit = lambda.limit();
  IdentityReport report = make_report("partition_sum", limit, {m});
  std::vector<long long> sums(limit + 1, 0);
  for (u64 d = 1; d <= limit; ++d) {
    if (lambda[d] == 0) continue;
    for (u64 n = d; n <= limit; n += d) sums[n] += lambda[d];
  }
  std::vector<char> is_power(limit + 1, 0);
  for (u64 d = 1;; ++d) {
    u64 dm = 1;
    bool over = false;
    for (int i = 0; i < m; ++i) {
      if (dm > limit / d) {
        over = true;
        break;
      }
      dm *= d;
    }
    if (over) break;
    is_power[dm] = 1;
  }
  for (u64 n = 1; n <= limit; ++n) {
    if (sums[n] != is_power[n]) report.record_failure(n, m, mismatch(is_power[n], sums[n]));
  }
  return report;
}

IdentityReport check_partition_sum(u64 limit, int m) {
  return check_partition_sum(build_lambda_table(build_spf(limit), m), m);
}

IdentityReport check_mu_recovery(const ValueTable& mu, const ValueTable& lambda, int m) {
  require_valid_m(m);
  const u64 limit = std::min(mu.limit(), lambda.limit());
  IdentityReport report = make_report("mu_recovery", limit, {m});
  std::vector<long long> rec(limit + 1, 0);
  for (u64 d = 1;; ++d) {
    u64 dm = 1;
    bool over = false;
    for (int i = 0; i < m; ++i) {
      if (dm > limit / d) {
        over = true;
        break;
      }
      dm *= d;
    }
    if (over) break;
    if (mu[d] == 0) continue;
    for (u64 k = 1; k <= limit / dm; ++k) rec[k * dm] += mu[d] * lambda[k];
  }
  for (u64 n = 1; n <= limit; ++n) {
    if (rec[n] != mu[n]) report.record_failure(n, m, mismatch(mu[n], rec[n]));
  }
  return report;
}

IdentityReport check_mu_recovery(u64 limit, int m) {
  const SpfTable table = build_spf(limit);
  return check_mu_recovery(build_mu_table(table), build_lambda_table(table, m), m);
}

IdentityReport check_duality(const SpfTable& table, const ValueTable& lambda, int m,
                             const FunctionHandle& f, u64 limit) {
  require_valid_m(m);
  require_f1_zero(f);
  if (limit > table.limit() || limit > lambda.limit()) {
    throw OutOfRangeError("duality range exceeds the sieve tables");
  }
  IdentityReport report = make_report("duality[" + f.name() + "]", limit, {m});
  std::vector<std::int64_t> lhs(limit + 1, 0);
  for (u64 d = 1; d <= limit; ++d) {
    if (lambda[d] == 0) continue;
    const std::int64_t w = lambda[d] * f(table[d]);
    if (w == 0) continue;
    for (u64 n = d; n <= limit; n += d) lhs[n] += w;
  }
  for (u64 n = 1; n <= limit; ++n) {
    const std::int64_t rhs = -f(big_p_m_of(factorize(n, table), m));
    if (lhs[n] != rhs) report.record_failure(n, m, mismatch(rhs, lhs[n]));
  }
  return report;
}

IdentityReport check_dual_remark(const SpfTable& table, const ValueTable& lambda, int m,
                                 const FunctionHandle& f, u64 limit) {
  require_valid_m(m);
  require_f1_zero(f);
  if (limit > table.limit() || limit > lambda.limit()) {
    throw OutOfRangeError("dual remark range exceeds the sieve tables");
  }
  IdentityReport report = make_report("dual_remark[" + f.name() + "]", limit, {m});
  std::vector<std::int64_t> lhs(limit + 1, 0);
  for (u64 d = 1; d <= limit; ++d) {
    if (lambda[d] == 0) continue;
    const std::int64_t w = lambda[d] * f(big_p_m_of(factorize(d, table), m));
    if (w == 0) continue;
    for (u64 n = d; n <= limit; n += d) lhs[n] += w;
  }
  for (u64 n = 1; n <= limit; ++n) {
    const auto factors = factorize(n, table).factors;
    const std::int64_t rhs = remark_rhs(factors, m, f, RemarkIndexRule::first_index_or_all);
    if (lhs[n] != rhs) {
      report.record_failure(n, m, mismatch(rhs, lhs[n]));
      continue;
    }
    const std::int64_t literal = remark_rhs(factors, m, f, RemarkIndexRule::first_index);
    if (literal != lhs[n]) {
      report.record_flag(n, m,
                         "no index with m not dividing the exponent; literal reading gives " +
                             std::to_string(literal) + ", lhs is " + std::to_string(lhs[n]));
    }
  }
  if (report.flagged > 0) {
    report.note =
        "j0 is undefined for perfect m-th powers; the literal empty-sum reading disagrees there "
        "and taking j0 = r restores equality";
  }
  return report;
}

}  // namespace chebdense
