#include <string>

#include "chebdense/arith_sieve.hpp"
#include "chebdense/errors.hpp"

namespace chebdense {

Factorization factorize(u64 n, const SpfTable& table) {
  if (n == 0 || n > table.limit()) {
    throw OutOfRangeError("cannot factorize " + std::to_string(n) + " with spf table limit " +
                          std::to_string(table.limit()));
  }
  Factorization f;
  f.n = n;
  while (n > 1) {
    const u64 p = table[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  return f;
}

int lambda_m_of(const Factorization& f, int m) {
  require_valid_m(m);
  int sign = 1;
  for (const auto& [p, e] : f.factors) {
    const unsigned r = e % static_cast<unsigned>(m);
    if (r >= 2) return 0;
    if (r == 1) sign = -sign;
  }
  return sign;
}

int mu_of(const Factorization& f) {
  int sign = 1;
  for (const auto& pe : f.factors) {
    if (pe.exponent >= 2) return 0;
    sign = -sign;
  }
  return sign;
}

unsigned big_omega_of(const Factorization& f) {
  unsigned total = 0;
  for (const auto& pe : f.factors) total += pe.exponent;
  return total;
}

u64 p_min(u64 n, const SpfTable& table) { return table.at(n); }

u64 big_p_m_of(const Factorization& f, int m) {
  require_valid_m(m);
  for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
    if (it->exponent % static_cast<unsigned>(m) != 0) return it->prime;
  }
  return 1;
}

u64 big_p_of(const Factorization& f) { return f.factors.empty() ? 1 : f.factors.back().prime; }

ValueTable ValueTable::prefix(u64 limit) const {
  if (limit > this->limit()) {
    throw OutOfRangeError("prefix " + std::to_string(limit) + " beyond table limit " +
                          std::to_string(this->limit()));
  }
  ValueTable out(limit);
  for (u64 n = 1; n <= limit; ++n) out.values_[n] = values_[n];
  return out;
}

ValueTable build_mu_table(const SpfTable& table) {
  ValueTable values(table.limit());
  for (u64 n = 1; n <= table.limit(); ++n) values.set(n, mu_of(factorize(n, table)));
  return values;
}

ValueTable build_lambda_table(const SpfTable& table, int m) {
  require_valid_m(m);
  ValueTable values(table.limit());
  for (u64 n = 1; n <= table.limit(); ++n) values.set(n, lambda_m_of(factorize(n, table), m));
  return values;
}

}  // namespace chebdense
