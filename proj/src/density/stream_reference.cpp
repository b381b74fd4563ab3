#include "stream_common.hpp"

namespace chebdense {

std::vector<StreamSnapshot> stream_sums_reference(int m, u64 limit,
                                                  std::span<const u64> checkpoints,
                                                  const PrimeClassifier* classifier) {
  detail::require_stream_args(m, limit);
  const std::vector<u64> cps = normalize_checkpoints(limit, checkpoints);
  const std::size_t class_count = classifier ? classifier->class_count() : 0;
  const SpfTable table = build_spf(limit);

  std::vector<StreamSnapshot> out;
  detail::Tally total(class_count);
  std::size_t next_cp = 0;
  for (u64 n = 1; n <= limit; ++n) {
    if (n == 1) {
      total.add_one();
    } else {
      const Factorization f = factorize(n, table);
      const int lambda = lambda_m_of(f, m);
      const int mu = mu_of(f);
      const double inv = 1.0 / static_cast<double>(n);
      if (lambda != 0) {
        const double term = lambda * inv;
        total.lambda_over_n.add(term);
        total.lambda_sum += lambda;
        if (classifier != nullptr) {
          const int idx = classifier->class_of(table[n]);
          if (idx < 0) {
            total.excluded.add(term);
          } else {
            total.classes[static_cast<std::size_t>(idx)].add(term);
          }
        }
      }
      if (mu != 0) total.mu_over_n.add(mu * inv);
      if (big_p_m_of(f, m) != big_p_of(f)) {
        ++total.mismatch_count;
        total.mismatch_harmonic.add(inv);
      }
    }
    if (n == cps[next_cp]) out.push_back(total.snapshot(cps[next_cp++]));
  }
  return out;
}

}  // namespace chebdense
