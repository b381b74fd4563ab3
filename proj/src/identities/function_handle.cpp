#include <algorithm>

#include "chebdense/errors.hpp"
#include "chebdense/identities.hpp"

namespace chebdense {

FunctionHandle FunctionHandle::indicator_of_prime(u64 q) {
  return FunctionHandle("indicator_of_prime(" + std::to_string(q) + ")",
                        [q](u64 n) -> std::int64_t { return n == q ? 1 : 0; });
}

FunctionHandle FunctionHandle::residue_class_on_primes(u64 k, std::vector<u64> residues) {
  if (k == 0) throw PreconditionError("residue handle needs k >= 1");
  std::string name = "residue_on_primes(mod " + std::to_string(k) + ":";
  for (auto& r : residues) {
    r %= k;
    name += " " + std::to_string(r);
  }
  name += ")";
  std::sort(residues.begin(), residues.end());
  return FunctionHandle(std::move(name), [k, residues](u64 n) -> std::int64_t {
    if (!oracle::is_prime(n)) return 0;
    return std::binary_search(residues.begin(), residues.end(), n % k) ? 1 : 0;
  });
}

FunctionHandle FunctionHandle::one_on_primes() {
  return FunctionHandle("one_on_primes",
                        [](u64 n) -> std::int64_t { return oracle::is_prime(n) ? 1 : 0; });
}

FunctionHandle FunctionHandle::frobenius_class(std::shared_ptr<const GaloisContext> ctx,
                                               const std::string& class_id) {
  const std::size_t index = ctx->class_index(class_id);
  return FunctionHandle(
      "frobenius_class(" + ctx->label() + ":" + class_id + ")",
      [ctx, index](u64 n) -> std::int64_t {
        if (!oracle::is_prime(n)) return 0;
        return classify_prime(*ctx, n).class_index == static_cast<int>(index) ? 1 : 0;
      });
}

FunctionHandle FunctionHandle::point_values(std::string name, std::map<u64, std::int64_t> values) {
  return FunctionHandle(std::move(name), [values = std::move(values)](u64 n) -> std::int64_t {
    const auto it = values.find(n);
    return it == values.end() ? 0 : it->second;
  });
}

std::vector<FunctionHandle> builtin_handles() {
  return {FunctionHandle::one_on_primes(), FunctionHandle::indicator_of_prime(2),
          FunctionHandle::residue_class_on_primes(4, {1}),
          FunctionHandle::frobenius_class(std::make_shared<const GaloisContext>(s3_x3_2_context()),
                                          "3-cycles")};
}

}  // namespace chebdense
