#pragma once

#include <cstdint>
#include <string_view>

namespace chebdense {

inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{2} << 30;  // 2 GiB
inline constexpr const char* kMemoryBudgetEnv = "CHEBDENSE_MEMORY_BUDGET";

// Upper bound on bytes that table-building code may allocate in one go.
struct MemoryBudget {
  std::uint64_t bytes = kDefaultMemoryBudget;

  // Reads CHEBDENSE_MEMORY_BUDGET (decimal bytes); default when unset.
  static MemoryBudget from_env();

  // Throws CapacityError if `requested` exceeds the budget.
  void require(std::uint64_t requested, std::string_view what) const;
};

}  // namespace chebdense
