#pragma once

// Finite Galois extensions of Q described by their Frobenius classes, and the
// classification of unramified primes into those classes.
//
// Two classifier modes exist. Residue mode covers abelian (cyclotomic and
// subfield) contexts: the class of p is read from p mod k. Cycle-type mode
// reads the class from the distinct-degree factorization pattern of the
// defining polynomial mod p, which only determines the class when no two
// classes share a cycle type; such contexts are rejected.

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chebdense/poly_mod_p.hpp"

namespace chebdense {

enum class ClassifierMode { residue, cycle_type };

std::string_view to_string(ClassifierMode mode);

struct ConjClassSpec {
  std::string id;
  std::string name;
  u64 size = 0;
  // Residue mode: residues mod k mapping to this class.
  std::vector<u64> residues;
  // Cycle-type mode: factorization pattern mapping to this class.
  std::optional<CycleType> cycle_type;
};

class GaloisContext {
 public:
  // Validates every invariant; throws ConfigError on violation.
  static GaloisContext create(std::string label, std::vector<std::int64_t> poly, u64 group_order,
                              std::vector<ConjClassSpec> classes, ClassifierMode mode,
                              u64 modulus, std::vector<u64> excluded_primes);

  const std::string& label() const { return label_; }
  // Integer coefficients, lowest degree first, monic.
  const std::vector<std::int64_t>& poly() const { return poly_; }
  int degree() const { return static_cast<int>(poly_.size()) - 1; }
  u64 group_order() const { return group_order_; }
  const std::vector<ConjClassSpec>& classes() const { return classes_; }
  ClassifierMode mode() const { return mode_; }
  // k in residue mode, 0 otherwise.
  u64 modulus() const { return modulus_; }
  const std::vector<u64>& excluded_primes() const { return excluded_; }

  // Index of a class id; throws PreconditionError when unknown.
  std::size_t class_index(std::string_view id) const;
  // |C| / |G|.
  double density(std::size_t index) const;

  bool is_listed_excluded(u64 p) const;

  // Residue mode only: class index of p mod k, -1 when gcd(p, k) > 1.
  int residue_class_of(u64 p) const { return residue_class_[p % modulus_]; }

 private:
  GaloisContext() = default;

  std::string label_;
  std::vector<std::int64_t> poly_;
  u64 group_order_ = 0;
  std::vector<ConjClassSpec> classes_;
  ClassifierMode mode_ = ClassifierMode::residue;
  u64 modulus_ = 0;
  std::vector<u64> excluded_;
  std::vector<int> residue_class_;  // residue mode: class index per residue, -1 for non-units
};

enum class ExclusionReason { ramified, nonsquarefree };

std::string_view to_string(ExclusionReason reason);

struct Classification {
  int class_index = -1;
  std::optional<ExclusionReason> excluded;
  // Factorization pattern of the defining polynomial mod p when squarefree.
  std::optional<CycleType> cycle_type;

  bool is_excluded() const { return excluded.has_value(); }
};

// Total on primes: every prime is classified or excluded. Throws ConfigError
// when a squarefree reduction yields a cycle type no class claims.
Classification classify_prime(const GaloisContext& ctx, u64 p);

// Integer coefficients of the k-th cyclotomic polynomial, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(u64 k);
u64 euler_phi(u64 k);
// Multiplicative order of a mod k; gcd(a, k) must be 1.
u64 multiplicative_order(u64 a, u64 k);

// Presets. Selectors: "cyclotomic:k", "quadratic:d", "s3-x3-2".
GaloisContext cyclotomic_context(u64 k);
GaloisContext quadratic_context(std::int64_t d);
GaloisContext s3_x3_2_context();
std::optional<GaloisContext> preset_context(std::string_view selector);

// JSON context documents (see README for the schema).
GaloisContext context_from_json_text(std::string_view text);
GaloisContext load_context_file(const std::string& path);
std::string context_to_json_text(const GaloisContext& ctx);

// Presets first, then a file path. ConfigError when neither resolves.
GaloisContext resolve_context(std::string_view selector);

struct FrequencyCounts {
  u64 x = 0;
  std::vector<u64> class_counts;
  u64 excluded = 0;

  u64 classified() const;
  double frequency(std::size_t index) const;
};

FrequencyCounts chebotarev_frequencies(const GaloisContext& ctx, u64 x);

// Class index lookup for the hot loop: table-driven for residue mode and for
// primes up to `cache_limit`, direct classification above it. Returns -1 for
// excluded primes. Safe for concurrent use.
class PrimeClassifier {
 public:
  PrimeClassifier(const GaloisContext& ctx, u64 cache_limit);

  int class_of(u64 p) const {
    if (!residue_class_.empty()) return residue_class_[p % modulus_];
    if (p < cache_.size()) return cache_[p];
    return classify_uncached(p);
  }

  std::size_t class_count() const { return ctx_->classes().size(); }
  const GaloisContext& context() const { return *ctx_; }
  // Primes outside the excluded list whose reduction was not squarefree.
  u64 nonsquarefree_exclusions() const { return nonsquarefree_.load(); }

 private:
  int classify_uncached(u64 p) const;

  const GaloisContext* ctx_;
  u64 modulus_ = 1;
  std::vector<int> residue_class_;
  std::vector<std::int16_t> cache_;
  mutable std::atomic<u64> nonsquarefree_{0};
};

}  // namespace chebdense
