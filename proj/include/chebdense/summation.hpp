#pragma once

#include <cstdint>

namespace chebdense {

// Neumaier-compensated running sum. Adding the same values in the same order
// always produces the same bits.
class SumAccumulator {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
    ++count_;
  }

  // Folds another accumulator in, as if its terms followed ours.
  void merge(const SumAccumulator& other);

  double value() const { return sum_ + comp_; }
  double raw_sum() const { return sum_; }
  double compensation() const { return comp_; }
  std::uint64_t count() const { return count_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  std::uint64_t count_ = 0;
};

}  // namespace chebdense
