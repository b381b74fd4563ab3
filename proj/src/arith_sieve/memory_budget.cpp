#include "chebdense/memory_budget.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "chebdense/errors.hpp"

namespace chebdense {

MemoryBudget MemoryBudget::from_env() {
  const char* raw = std::getenv(kMemoryBudgetEnv);
  if (raw == nullptr || *raw == '\0') return {};
  std::uint64_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) {
    throw ConfigError(std::string(kMemoryBudgetEnv) + " must be a positive byte count, got '" +
                      raw + "'");
  }
  return MemoryBudget{value};
}

void MemoryBudget::require(std::uint64_t requested, std::string_view what) const {
  if (requested > bytes) {
    throw CapacityError(std::string(what) + " needs " + std::to_string(requested) +
                        " bytes, memory budget is " + std::to_string(bytes));
  }
}

}  // namespace chebdense
