#include <algorithm>

#include "chebdense/identities.hpp"

namespace chebdense {

VerifyBounds VerifyBounds::uniform(u64 n) { return VerifyBounds{n, n, n, n, n, n}; }

u64 VerifyBounds::max() const {
  return std::max({lambda_oracle, liouville, multiplicative, exact_identities, duality, dirichlet,
                   u64{1}});
}

namespace {

IdentityReport combine(std::vector<IdentityReport> parts) {
  IdentityReport out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out.merge(parts[i]);
    out.m_values.insert(out.m_values.end(), parts[i].m_values.begin(), parts[i].m_values.end());
  }
  return out;
}

}  // namespace

std::vector<IdentityReport> run_verification_suite(const VerifyOptions& options) {
  const VerifyBounds& b = options.bounds;
  const SpfTable table = build_spf(b.max());
  const ValueTable mu = build_mu_table(table);

  std::vector<ValueTable> lambda(6);
  for (int m = 2; m <= 5; ++m) {
    lambda[m] = build_lambda_table(table, m);
    if (options.corrupt_lambda_at && *options.corrupt_lambda_at <= table.limit()) {
      const u64 n = *options.corrupt_lambda_at;
      lambda[m].set(n, lambda[m][n] == 0 ? 1 : -lambda[m][n]);
    }
  }

  std::vector<IdentityReport> reports;
  const auto over_m = [&](std::initializer_list<int> ms, auto&& check) {
    std::vector<IdentityReport> parts;
    for (int m : ms) parts.push_back(check(m));
    reports.push_back(combine(std::move(parts)));
  };

  over_m({2, 3, 4, 5},
         [&](int m) { return check_lambda_oracle(lambda[m].prefix(b.lambda_oracle), m); });
  reports.push_back(check_liouville(lambda[2].prefix(b.liouville)));
  over_m({2, 3, 4},
         [&](int m) { return check_multiplicativity(lambda[m].prefix(b.multiplicative), m); });
  over_m({2, 3, 4}, [&](int m) {
    return check_squarefree_agreement(mu.prefix(b.exact_identities),
                                      lambda[m].prefix(b.exact_identities), m);
  });
  over_m({2, 3, 4},
         [&](int m) { return check_prime_power_rule(lambda[m].prefix(b.exact_identities), m); });
  over_m({2, 3, 4},
         [&](int m) { return check_partition_sum(lambda[m].prefix(b.exact_identities), m); });
  over_m({2, 3, 4}, [&](int m) {
    return check_mu_recovery(mu.prefix(b.exact_identities), lambda[m].prefix(b.exact_identities),
                             m);
  });

  for (const FunctionHandle& f : builtin_handles()) {
    over_m({2, 3}, [&](int m) { return check_duality(table, lambda[m], m, f, b.duality); });
  }
  for (const FunctionHandle& f : builtin_handles()) {
    reports.push_back(check_dual_remark(table, lambda[2], 2, f, b.duality));
  }

  const double zeta2 = zeta_reference(2.0);
  reports.push_back(check_dirichlet(lambda[2], 2.0, b.dirichlet, zeta_reference(4.0) / zeta2,
                                    "dirichlet_lambda2_s2"));
  reports.push_back(check_dirichlet(mu, 2.0, b.dirichlet, 1.0 / zeta2, "dirichlet_mu_s2"));
  return reports;
}

}  // namespace chebdense
