#pragma once

// Streaming partial sums over n <= X: class-restricted lambda_m sums, the
// full L(x) and A(x) sums, the summatory function of lambda_m and the
// P_m(n) != P(n) statistics, all from one segmented pass.
//
// Sums run in ascending n with compensated accumulation. Segments never
// straddle a checkpoint and are merged in ascending order, so results depend
// only on (m, X, checkpoints, segment size), never on the thread count.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chebdense/arith_sieve.hpp"
#include "chebdense/galois_context.hpp"
#include "chebdense/segment.hpp"

namespace chebdense {

struct StreamOptions {
  u64 segment_size = kDefaultSegmentSize;
  // 0 means the OpenMP default.
  int threads = 0;
};

// Running totals at one checkpoint x.
struct StreamSnapshot {
  u64 x = 0;
  // Per class: sum over 2 <= n <= x with class(p(n)) = c of lambda_m(n) / n.
  std::vector<double> class_sums;
  // Same sum over n >= 2 whose p(n) is excluded.
  double excluded_sum = 0.0;
  // sum_{n <= x} lambda_m(n) / n and sum_{n <= x} mu(n) / n.
  double lambda_over_n = 0.0;
  double mu_over_n = 0.0;
  // sum_{n <= x} lambda_m(n).
  std::int64_t lambda_sum = 0;
  // #{n <= x : P_m(n) != P(n)} and the matching sum of 1 / n.
  u64 mismatch_count = 0;
  double mismatch_harmonic = 0.0;
};

// Sorted, deduplicated checkpoints in [1, X] with X appended. An empty list
// selects powers of ten from 10^3 up to X.
std::vector<u64> normalize_checkpoints(u64 limit, std::span<const u64> checkpoints);

// Bytes the parallel pass allocates for a given configuration.
u64 stream_memory_estimate(u64 limit, const StreamOptions& options);

// Segmented OpenMP pass. `classifier` may be null, in which case class_sums
// is empty and excluded_sum stays 0.
std::vector<StreamSnapshot> stream_sums(int m, u64 limit, std::span<const u64> checkpoints,
                                        const PrimeClassifier* classifier,
                                        const StreamOptions& options = {});

// Serial whole-range reference: one spf table, one factorization per n.
std::vector<StreamSnapshot> stream_sums_reference(int m, u64 limit,
                                                  std::span<const u64> checkpoints,
                                                  const PrimeClassifier* classifier);

struct DensityPoint {
  u64 x = 0;
  double partial_sum = 0.0;
  double target = 0.0;
  double abs_err = 0.0;
};

struct DensitySeries {
  int m = 2;
  std::string descriptor;
  std::string class_id;
  double target = 0.0;
  std::vector<DensityPoint> points;

  u64 final_x() const { return points.empty() ? 0 : points.back().x; }
};

// S(x) = -sum_{2 <= n <= x, p(n) = l mod k} lambda_m(n) / n, target 1/phi(k).
// Throws PreconditionError when gcd(l, k) > 1.
DensitySeries progression_density(int m, u64 k, std::int64_t l, u64 limit,
                                  std::span<const u64> checkpoints,
                                  const StreamOptions& options = {});

// S(x) = -sum_{2 <= n <= x, Frob(p(n)) = C} lambda_m(n) / n, target |C|/|G|.
DensitySeries chebotarev_density(const GaloisContext& ctx, const std::string& class_id, int m,
                                 u64 limit, std::span<const u64> checkpoints,
                                 const StreamOptions& options = {});

// Every class of the context from a single pass, in context order.
std::vector<DensitySeries> chebotarev_density_all(const GaloisContext& ctx, int m, u64 limit,
                                                  std::span<const u64> checkpoints,
                                                  const StreamOptions& options = {});

struct PntPoint {
  u64 x = 0;
  double lambda_over_n = 0.0;  // L(x)
  double mu_over_n = 0.0;      // A(x)
};

std::vector<PntPoint> pnt_partial_sums(int m, u64 limit, std::span<const u64> checkpoints,
                                       const StreamOptions& options = {});

struct SummatoryPoint {
  u64 x = 0;
  std::int64_t value = 0;
  double normalized = 0.0;  // value / sqrt(x)
};

std::vector<SummatoryPoint> summatory_lambda(int m, u64 limit, std::span<const u64> checkpoints,
                                             const StreamOptions& options = {});

struct PmMismatchPoint {
  u64 x = 0;
  u64 count = 0;        // e(x)
  double fraction = 0;  // e(x) / x
  double harmonic = 0;  // H(x)
};

struct PmMismatchReport {
  int m = 2;
  std::vector<PmMismatchPoint> points;
  // H at the final checkpoint.
  double c_m_estimate = 0.0;
};

PmMismatchReport pm_mismatch(int m, u64 limit, std::span<const u64> checkpoints,
                             const StreamOptions& options = {});

}  // namespace chebdense
