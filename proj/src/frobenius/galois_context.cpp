#include <algorithm>
#include <numeric>
#include <set>

#include "chebdense/errors.hpp"
#include "chebdense/galois_context.hpp"

namespace chebdense {

std::string_view to_string(ClassifierMode mode) {
  return mode == ClassifierMode::residue ? "residue" : "cycle_type";
}

std::string_view to_string(ExclusionReason reason) {
  return reason == ExclusionReason::ramified ? "ramified" : "nonsquarefree";
}

u64 euler_phi(u64 k) {
  u64 result = k;
  u64 n = k;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

u64 multiplicative_order(u64 a, u64 k) {
  if (k == 1) return 1;
  if (std::gcd(a, k) != 1) throw PreconditionError("order needs gcd(a, k) = 1");
  a %= k;
  u64 order = 1;
  u64 v = a;
  while (v != 1) {
    v = mul_mod(v, a, k);
    ++order;
  }
  return order;
}

GaloisContext GaloisContext::create(std::string label, std::vector<std::int64_t> poly,
                                    u64 group_order, std::vector<ConjClassSpec> classes,
                                    ClassifierMode mode, u64 modulus,
                                    std::vector<u64> excluded_primes) {
  const auto fail = [&](const std::string& why) {
    throw ConfigError("context '" + label + "': " + why);
  };
  if (poly.size() < 2) fail("defining polynomial must have degree >= 1");
  if (poly.back() != 1) fail("defining polynomial must be monic");
  if (group_order == 0) fail("group order must be positive");
  if (classes.empty()) fail("at least one conjugacy class is required");

  std::set<std::string> ids;
  u64 total = 0;
  for (const auto& c : classes) {
    if (c.id.empty()) fail("class id must be non-empty");
    if (!ids.insert(c.id).second) fail("duplicate class id '" + c.id + "'");
    if (c.size == 0) fail("class '" + c.id + "' has size 0");
    total += c.size;
  }
  if (total != group_order) {
    fail("class sizes sum to " + std::to_string(total) + ", group order is " +
         std::to_string(group_order));
  }

  for (u64 p : excluded_primes) {
    if (p < 2) fail("excluded prime " + std::to_string(p) + " is not a prime");
  }
  std::sort(excluded_primes.begin(), excluded_primes.end());
  excluded_primes.erase(std::unique(excluded_primes.begin(), excluded_primes.end()),
                        excluded_primes.end());

  GaloisContext ctx;
  const int degree = static_cast<int>(poly.size()) - 1;
  if (mode == ClassifierMode::residue) {
    if (modulus == 0) fail("residue mode needs a modulus k >= 1");
    const u64 phi = euler_phi(modulus);
    ctx.residue_class_.assign(modulus, -1);
    u64 covered = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& c = classes[i];
      if (c.residues.empty()) fail("class '" + c.id + "' has no residues");
      for (u64 r : c.residues) {
        if (r >= modulus) fail("residue " + std::to_string(r) + " not reduced mod k");
        if (std::gcd(r, modulus) != 1) fail("residue " + std::to_string(r) + " is not a unit");
        if (ctx.residue_class_[r] != -1) {
          fail("residue " + std::to_string(r) + " assigned to more than one class");
        }
        ctx.residue_class_[r] = static_cast<int>(i);
        ++covered;
      }
      // The Frobenius map on units is a surjective homomorphism, so every
      // element of G has phi(k) / |G| preimages.
      if (static_cast<unsigned __int128>(c.residues.size()) * group_order !=
          static_cast<unsigned __int128>(phi) * c.size) {
        fail("class '" + c.id + "' has " + std::to_string(c.residues.size()) +
             " residues, inconsistent with |C|/|G| of phi(k) units");
      }
    }
    if (covered != phi) fail("residue sets do not cover all units mod k");
  } else {
    if (modulus != 0) fail("cycle_type mode takes no modulus");
    std::set<CycleType> seen;
    for (const auto& c : classes) {
      if (!c.cycle_type) fail("class '" + c.id + "' has no cycle type");
      if (c.cycle_type->total() != static_cast<unsigned>(degree)) {
        fail("cycle type " + c.cycle_type->to_string() + " of class '" + c.id +
             "' does not sum to the polynomial degree");
      }
      if (!seen.insert(*c.cycle_type).second) {
        fail("cycle type " + c.cycle_type->to_string() +
             " assigned to more than one class; cycle type must determine the class");
      }
    }
  }

  ctx.label_ = std::move(label);
  ctx.poly_ = std::move(poly);
  ctx.group_order_ = group_order;
  ctx.classes_ = std::move(classes);
  ctx.mode_ = mode;
  ctx.modulus_ = modulus;
  ctx.excluded_ = std::move(excluded_primes);
  return ctx;
}

std::size_t GaloisContext::class_index(std::string_view id) const {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].id == id) return i;
  }
  throw PreconditionError("context '" + label_ + "' has no class '" + std::string(id) + "'");
}

double GaloisContext::density(std::size_t index) const {
  return static_cast<double>(classes_.at(index).size) / static_cast<double>(group_order_);
}

bool GaloisContext::is_listed_excluded(u64 p) const {
  return std::binary_search(excluded_.begin(), excluded_.end(), p);
}

}  // namespace chebdense
