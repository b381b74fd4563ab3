#include <cmath>
#include <numeric>

#include "chebdense/density.hpp"
#include "chebdense/errors.hpp"

namespace chebdense {

namespace {

void require_density_limit(u64 limit) {
  if (limit < 2) throw PreconditionError("density sums need X >= 2");
}

DensitySeries series_for(const GaloisContext& ctx, std::size_t index, int m,
                         const std::vector<StreamSnapshot>& snaps) {
  DensitySeries s;
  s.m = m;
  s.descriptor = ctx.label();
  s.class_id = ctx.classes()[index].id;
  s.target = ctx.density(index);
  for (const auto& snap : snaps) {
    const double partial = -snap.class_sums[index];
    s.points.push_back({snap.x, partial, s.target, std::abs(partial - s.target)});
  }
  return s;
}

}  // namespace

std::vector<DensitySeries> chebotarev_density_all(const GaloisContext& ctx, int m, u64 limit,
                                                  std::span<const u64> checkpoints,
                                                  const StreamOptions& options) {
  require_density_limit(limit);
  const PrimeClassifier classifier(ctx, isqrt(limit));
  const auto snaps = stream_sums(m, limit, checkpoints, &classifier, options);
  std::vector<DensitySeries> out;
  for (std::size_t i = 0; i < ctx.classes().size(); ++i) out.push_back(series_for(ctx, i, m, snaps));
  return out;
}

DensitySeries chebotarev_density(const GaloisContext& ctx, const std::string& class_id, int m,
                                 u64 limit, std::span<const u64> checkpoints,
                                 const StreamOptions& options) {
  const std::size_t index = ctx.class_index(class_id);
  require_density_limit(limit);
  const PrimeClassifier classifier(ctx, isqrt(limit));
  const auto snaps = stream_sums(m, limit, checkpoints, &classifier, options);
  return series_for(ctx, index, m, snaps);
}

DensitySeries progression_density(int m, u64 k, std::int64_t l, u64 limit,
                                  std::span<const u64> checkpoints,
                                  const StreamOptions& options) {
  if (k == 0) throw PreconditionError("progression modulus k must be >= 1");
  const auto sk = static_cast<std::int64_t>(k);
  const u64 residue = static_cast<u64>(((l % sk) + sk) % sk);
  if (std::gcd(residue, k) != 1) {
    throw PreconditionError("progression needs gcd(l, k) = 1, got l = " + std::to_string(l) +
                            ", k = " + std::to_string(k));
  }
  const GaloisContext ctx = cyclotomic_context(k);
  DensitySeries s = chebotarev_density(ctx, std::to_string(residue), m, limit, checkpoints, options);
  s.descriptor = "progression:" + std::to_string(residue) + "mod" + std::to_string(k);
  return s;
}

std::vector<PntPoint> pnt_partial_sums(int m, u64 limit, std::span<const u64> checkpoints,
                                       const StreamOptions& options) {
  std::vector<PntPoint> out;
  for (const auto& s : stream_sums(m, limit, checkpoints, nullptr, options)) {
    out.push_back({s.x, s.lambda_over_n, s.mu_over_n});
  }
  return out;
}

std::vector<SummatoryPoint> summatory_lambda(int m, u64 limit, std::span<const u64> checkpoints,
                                             const StreamOptions& options) {
  std::vector<SummatoryPoint> out;
  for (const auto& s : stream_sums(m, limit, checkpoints, nullptr, options)) {
    out.push_back({s.x, s.lambda_sum,
                   static_cast<double>(s.lambda_sum) / std::sqrt(static_cast<double>(s.x))});
  }
  return out;
}

PmMismatchReport pm_mismatch(int m, u64 limit, std::span<const u64> checkpoints,
                             const StreamOptions& options) {
  PmMismatchReport r;
  r.m = m;
  for (const auto& s : stream_sums(m, limit, checkpoints, nullptr, options)) {
    r.points.push_back({s.x, s.mismatch_count,
                        static_cast<double>(s.mismatch_count) / static_cast<double>(s.x),
                        s.mismatch_harmonic});
  }
  if (!r.points.empty()) r.c_m_estimate = r.points.back().harmonic;
  return r;
}

}  // namespace chebdense
