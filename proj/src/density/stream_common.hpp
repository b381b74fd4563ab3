#pragma once

#include <vector>

#include "chebdense/density.hpp"
#include "chebdense/summation.hpp"

namespace chebdense::detail {

// Per-range accumulators; merged in ascending range order.
struct Tally {
  std::vector<SumAccumulator> classes;
  SumAccumulator excluded;
  SumAccumulator lambda_over_n;
  SumAccumulator mu_over_n;
  SumAccumulator mismatch_harmonic;
  std::int64_t lambda_sum = 0;
  u64 mismatch_count = 0;

  explicit Tally(std::size_t class_count = 0) : classes(class_count) {}

  void merge(const Tally& other) {
    for (std::size_t c = 0; c < classes.size(); ++c) classes[c].merge(other.classes[c]);
    excluded.merge(other.excluded);
    lambda_over_n.merge(other.lambda_over_n);
    mu_over_n.merge(other.mu_over_n);
    mismatch_harmonic.merge(other.mismatch_harmonic);
    lambda_sum += other.lambda_sum;
    mismatch_count += other.mismatch_count;
  }

  // n = 1: lambda = mu = 1, P_m(1) = P(1) = 1, no class.
  void add_one() {
    lambda_over_n.add(1.0);
    mu_over_n.add(1.0);
    lambda_sum += 1;
  }

  StreamSnapshot snapshot(u64 x) const {
    StreamSnapshot s;
    s.x = x;
    s.class_sums.reserve(classes.size());
    for (const auto& c : classes) s.class_sums.push_back(c.value());
    s.excluded_sum = excluded.value();
    s.lambda_over_n = lambda_over_n.value();
    s.mu_over_n = mu_over_n.value();
    s.lambda_sum = lambda_sum;
    s.mismatch_count = mismatch_count;
    s.mismatch_harmonic = mismatch_harmonic.value();
    return s;
  }
};

void require_stream_args(int m, u64 limit);

}  // namespace chebdense::detail
