#include <algorithm>
#include <cmath>

#include <omp.h>

#include "chebdense/errors.hpp"
#include "chebdense/memory_budget.hpp"
#include "stream_common.hpp"

namespace chebdense {

namespace detail {

void require_stream_args(int m, u64 limit) {
  require_valid_m(m);
  if (limit == 0) throw PreconditionError("stream limit must be >= 1");
  if (limit > kMaxSegmentValue) {
    throw PreconditionError("stream limit " + std::to_string(limit) + " exceeds 2^32 - 1");
  }
}

}  // namespace detail

namespace {

struct Range {
  u64 lo;
  u64 hi;
  bool ends_at_checkpoint;
};

detail::Tally tally_segment(const Segment& seg, const PrimeClassifier* classifier,
                            std::size_t class_count) {
  detail::Tally t(class_count);
  const auto cells = seg.cells();
  const u64 lo = seg.lo();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const SegmentCell& c = cells[i];
    const double inv = 1.0 / static_cast<double>(lo + i);
    if (c.lambda != 0) {
      const double term = c.lambda * inv;
      t.lambda_over_n.add(term);
      t.lambda_sum += c.lambda;
      if (classifier != nullptr) {
        const int idx = classifier->class_of(c.spf);
        if (idx < 0) {
          t.excluded.add(term);
        } else {
          t.classes[static_cast<std::size_t>(idx)].add(term);
        }
      }
    }
    if (c.mu != 0) t.mu_over_n.add(c.mu * inv);
    if (c.big_p_m != c.big_p) {
      ++t.mismatch_count;
      t.mismatch_harmonic.add(inv);
    }
  }
  return t;
}

int resolve_threads(const StreamOptions& options) {
  return options.threads > 0 ? options.threads : omp_get_max_threads();
}

}  // namespace

std::vector<u64> normalize_checkpoints(u64 limit, std::span<const u64> checkpoints) {
  std::vector<u64> out;
  if (checkpoints.empty()) {
    for (u64 x = 1000; x <= limit; x *= 10) {
      out.push_back(x);
      if (x > limit / 10) break;
    }
  } else {
    for (u64 x : checkpoints) {
      if (x >= 1 && x <= limit) out.push_back(x);
    }
  }
  out.push_back(limit);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

u64 stream_memory_estimate(u64 limit, const StreamOptions& options) {
  const u64 seg = std::min<u64>(std::max<u64>(options.segment_size, 1), limit);
  const u64 threads = static_cast<u64>(resolve_threads(options));
  const u64 root = isqrt(limit) + 1;
  return threads * seg * Segment::bytes_per_index() + root * (sizeof(std::uint32_t) + 2);
}

std::vector<StreamSnapshot> stream_sums(int m, u64 limit, std::span<const u64> checkpoints,
                                        const PrimeClassifier* classifier,
                                        const StreamOptions& options) {
  detail::require_stream_args(m, limit);
  if (options.segment_size == 0) throw PreconditionError("segment size must be >= 1");
  MemoryBudget::from_env().require(stream_memory_estimate(limit, options), "density pass");

  const std::vector<u64> cps = normalize_checkpoints(limit, checkpoints);
  const std::size_t class_count = classifier ? classifier->class_count() : 0;
  const std::vector<std::uint32_t> base = primes_up_to(isqrt(limit));

  std::vector<Range> ranges;
  u64 cur = 2;
  for (u64 cp : cps) {
    while (cur <= cp) {
      const u64 hi = std::min(cp, cur + (options.segment_size - 1));
      ranges.push_back({cur, hi, hi == cp});
      cur = hi + 1;
    }
  }

  std::vector<detail::Tally> tallies(ranges.size());
  const int threads = resolve_threads(options);
#pragma omp parallel num_threads(threads)
  {
    Segment seg;
#pragma omp for schedule(dynamic, 1)
    for (std::size_t i = 0; i < ranges.size(); ++i) {
      build_segment_into(seg, ranges[i].lo, ranges[i].hi, base, m);
      tallies[i] = tally_segment(seg, classifier, class_count);
    }
  }

  std::vector<StreamSnapshot> out;
  out.reserve(cps.size());
  detail::Tally total(class_count);
  total.add_one();
  std::size_t next_cp = 0;
  if (cps.front() == 1) out.push_back(total.snapshot(cps[next_cp++]));
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    total.merge(tallies[i]);
    if (ranges[i].ends_at_checkpoint) out.push_back(total.snapshot(cps[next_cp++]));
  }
  return out;
}

}  // namespace chebdense
