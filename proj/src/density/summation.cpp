#include "chebdense/summation.hpp"

namespace chebdense {

void SumAccumulator::merge(const SumAccumulator& other) {
  const std::uint64_t n = count_ + other.count_;
  add(other.sum_);
  add(other.comp_);
  count_ = n;
}

}  // namespace chebdense
