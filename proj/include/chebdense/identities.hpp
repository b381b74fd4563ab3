#pragma once

// Brute-force oracles for the exact identities satisfied by lambda_m, and
// exhaustive checks of the sieve path against them.
//
// Oracle code uses trial division and direct divisor enumeration only; it
// shares nothing with arith_sieve, so agreement between the two is
// independent evidence.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chebdense/arith_sieve.hpp"
#include "chebdense/galois_context.hpp"

namespace chebdense {

namespace oracle {

std::vector<PrimePower> trial_factor(u64 n);
int mu(u64 n);
// Sum over d with d^m | n of mu(n / d^m).
int lambda_brute(u64 n, int m);
unsigned big_omega(u64 n);
u64 smallest_prime(u64 n);  // 1 for n = 1
u64 largest_prime_not_mth_power(u64 n, int m);
std::vector<u64> divisors(u64 n);
bool is_perfect_power(u64 n, int m);
bool is_prime(u64 n);

}  // namespace oracle

struct Counterexample {
  u64 n = 0;
  int m = 0;
  std::string detail;
};

struct IdentityReport {
  std::string identity;
  u64 lo = 1;
  u64 hi = 0;
  std::vector<int> m_values;
  u64 failures = 0;
  // Smallest (n, m) failure.
  std::optional<Counterexample> first;
  // Cases set aside for review rather than counted as failures.
  u64 flagged = 0;
  std::optional<Counterexample> first_flagged;
  std::string note;

  bool passed() const { return failures == 0; }
  void record_failure(u64 n, int m, std::string detail);
  void record_flag(u64 n, int m, std::string detail);
  // Order-independent: counts add, minimal counterexamples win.
  void merge(const IdentityReport& other);
};

// Arithmetic test function with f(1) = 0, integer valued on primes.
// All built-in handles are {0, 1}-valued so identity sums stay exact.
class FunctionHandle {
 public:
  static FunctionHandle indicator_of_prime(u64 q);
  static FunctionHandle residue_class_on_primes(u64 k, std::vector<u64> residues);
  static FunctionHandle one_on_primes();
  static FunctionHandle frobenius_class(std::shared_ptr<const GaloisContext> ctx,
                                        const std::string& class_id);
  // Explicit point values, zero elsewhere. Used for negative tests.
  static FunctionHandle point_values(std::string name, std::map<u64, std::int64_t> values);

  const std::string& name() const { return name_; }
  std::int64_t operator()(u64 n) const { return fn_(n); }

 private:
  FunctionHandle(std::string name, std::function<std::int64_t(u64)> fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}

  std::string name_;
  std::function<std::int64_t(u64)> fn_;
};

// Handles exercised by the verification suite: constant 1 on primes, the
// indicator of 2, primes = 1 mod 4, and the 3-cycle class of x^3 - 2.
std::vector<FunctionHandle> builtin_handles();

struct IdentitySides {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

// Duality: lhs = sum_{d | n} lambda_m(d) f(p(d)), rhs = -f(P_m(n)).
// Throws PreconditionError when f(1) != 0.
IdentitySides duality_eval(u64 n, int m, const FunctionHandle& f);

// How j0 is read when n is a perfect m-th power, i.e. when every exponent
// is a multiple of m and no first index exists.
enum class RemarkIndexRule {
  // j0 is the first index with m not dividing alpha_j; empty sum otherwise.
  first_index,
  // Same, but j0 = r (all indices) when every alpha_j is a multiple of m.
  first_index_or_all,
};

// lhs = sum_{d | n} lambda_m(d) f(P_m(d)),
// rhs = -sum_{j <= j0} f(p_j) d_j(n), d_j(n) counted by enumeration.
IdentitySides dual_remark_eval(u64 n, int m, const FunctionHandle& f,
                               RemarkIndexRule rule = RemarkIndexRule::first_index_or_all);

// Sieve-table lambda_m against lambda_brute on [1, lambda.limit()].
IdentityReport check_lambda_oracle(const ValueTable& lambda, int m);
// lambda_2(n) = (-1)^Omega(n), Omega by trial division.
IdentityReport check_liouville(const ValueTable& lambda2);
// lambda_m(ab) = lambda_m(a) lambda_m(b) for coprime a, b with ab <= limit.
IdentityReport check_multiplicativity(const ValueTable& lambda, int m);
// mu(n) = mu(n)^2 lambda_m(n).
IdentityReport check_squarefree_agreement(const ValueTable& mu, const ValueTable& lambda, int m);
// lambda_m(p^a) = mu(p^(a mod m)) on prime powers.
IdentityReport check_prime_power_rule(const ValueTable& lambda, int m);
// sum_{d | n} lambda_m(d) = [n is a perfect m-th power].
IdentityReport check_partition_sum(const ValueTable& lambda, int m);
IdentityReport check_partition_sum(u64 limit, int m);
// mu(n) = sum_{d^m | n} mu(d) lambda_m(n / d^m).
IdentityReport check_mu_recovery(const ValueTable& mu, const ValueTable& lambda, int m);
IdentityReport check_mu_recovery(u64 limit, int m);

// Duality over [1, limit] with sieve-derived lambda_m, p(d) and P_m(n).
IdentityReport check_duality(const SpfTable& table, const ValueTable& lambda, int m,
                             const FunctionHandle& f, u64 limit);
// Remark identity over [1, limit]. Failures use first_index_or_all; cases
// where only the literal first_index reading disagrees are flagged.
IdentityReport check_dual_remark(const SpfTable& table, const ValueTable& lambda, int m,
                                 const FunctionHandle& f, u64 limit);

// Compensated sum_{n <= limit} values[n] / n^s. Throws for s <= 1.
double truncated_dirichlet(const ValueTable& values, double s, u64 limit);

// zeta(s), s > 1: closed forms at 2, 4, 6, 8, otherwise a long direct sum
// plus an integral tail estimate.
double zeta_reference(double s);

// Bound on sum_{n > limit} n^-s, i.e. limit^(1-s) / (s - 1).
double dirichlet_tail_bound(double s, u64 limit);

// |truncated sum - target| <= tail bound.
IdentityReport check_dirichlet(const ValueTable& values, double s, u64 limit, double target,
                               std::string name);

struct VerifyBounds {
  u64 lambda_oracle = 100000;
  u64 liouville = 1000000;
  u64 multiplicative = 10000;
  u64 exact_identities = 100000;
  u64 duality = 10000;
  u64 dirichlet = 1000000;

  // Every bound set to `n`.
  static VerifyBounds uniform(u64 n);
  u64 max() const;

  friend bool operator==(const VerifyBounds&, const VerifyBounds&) = default;
};

struct VerifyOptions {
  VerifyBounds bounds;
  // Test hook: flip lambda_m(n) at this index (0 becomes 1) in every sieve table.
  std::optional<u64> corrupt_lambda_at;
};

std::vector<IdentityReport> run_verification_suite(const VerifyOptions& options);

}  // namespace chebdense
