#include <numeric>

#include "chebdense/errors.hpp"
#include "chebdense/galois_context.hpp"
#include "chebdense/segment.hpp"

namespace chebdense {

namespace {

std::optional<CycleType> reduction_pattern(const GaloisContext& ctx, u64 p) {
  const PolyModP f = PolyModP::from_integers(p, ctx.poly());
  if (f.degree() != ctx.degree() || !is_squarefree_mod_p(f)) return std::nullopt;
  return ddf_pattern(f);
}

}  // namespace

Classification classify_prime(const GaloisContext& ctx, u64 p) {
  if (p < 2) throw PreconditionError("classify_prime needs a prime, got " + std::to_string(p));
  Classification out;
  if (ctx.mode() == ClassifierMode::residue) {
    const int idx = ctx.residue_class_of(p);
    if (idx < 0 || ctx.is_listed_excluded(p)) {
      out.excluded = ExclusionReason::ramified;
      return out;
    }
    out.class_index = idx;
    out.cycle_type = reduction_pattern(ctx, p);
    return out;
  }

  if (ctx.is_listed_excluded(p)) {
    out.excluded = ExclusionReason::ramified;
    return out;
  }
  out.cycle_type = reduction_pattern(ctx, p);
  if (!out.cycle_type) {
    out.excluded = ExclusionReason::nonsquarefree;
    return out;
  }
  const auto& classes = ctx.classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].cycle_type == out.cycle_type) {
      out.class_index = static_cast<int>(i);
      return out;
    }
  }
  throw ConfigError("context '" + ctx.label() + "': prime " + std::to_string(p) +
                    " has cycle type " + out.cycle_type->to_string() +
                    " which no class claims");
}

u64 FrequencyCounts::classified() const {
  return std::accumulate(class_counts.begin(), class_counts.end(), u64{0});
}

double FrequencyCounts::frequency(std::size_t index) const {
  const u64 total = classified();
  return total == 0 ? 0.0
                    : static_cast<double>(class_counts.at(index)) / static_cast<double>(total);
}

FrequencyCounts chebotarev_frequencies(const GaloisContext& ctx, u64 x) {
  if (x < 2) throw PreconditionError("chebotarev_frequencies needs x >= 2");
  FrequencyCounts counts;
  counts.x = x;
  counts.class_counts.assign(ctx.classes().size(), 0);
  const PrimeClassifier classifier(ctx, x);
  for (std::uint32_t p : primes_up_to(x)) {
    const int idx = classifier.class_of(p);
    if (idx < 0) {
      ++counts.excluded;
    } else {
      ++counts.class_counts[static_cast<std::size_t>(idx)];
    }
  }
  return counts;
}

PrimeClassifier::PrimeClassifier(const GaloisContext& ctx, u64 cache_limit) : ctx_(&ctx) {
  if (ctx.classes().size() > 32767) throw ConfigError("too many classes for the classifier");
  if (ctx.mode() == ClassifierMode::residue) {
    modulus_ = ctx.modulus();
    residue_class_.resize(modulus_);
    for (u64 r = 0; r < modulus_; ++r) residue_class_[r] = ctx.residue_class_of(r);
    // Listed exclusions that are units mod k need the slow path.
    for (u64 p : ctx.excluded_primes()) {
      if (std::gcd(p, modulus_) == 1) {
        residue_class_.clear();
        break;
      }
    }
    if (!residue_class_.empty()) return;
  }
  cache_.assign(cache_limit + 1, -1);
  for (std::uint32_t p : primes_up_to(cache_limit)) {
    cache_[p] = static_cast<std::int16_t>(classify_uncached(p));
  }
}

int PrimeClassifier::classify_uncached(u64 p) const {
  const Classification c = classify_prime(*ctx_, p);
  if (c.excluded == ExclusionReason::nonsquarefree) nonsquarefree_.fetch_add(1);
  return c.class_index;
}

}  // namespace chebdense
