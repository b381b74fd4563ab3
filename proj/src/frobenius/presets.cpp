#include <charconv>
#include <numeric>

#include "chebdense/errors.hpp"
#include "chebdense/galois_context.hpp"

namespace chebdense {

namespace {

inline constexpr u64 kMaxCyclotomicK = 1000000;

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Exact quotient of integer polynomials when b is monic.
std::vector<std::int64_t> exact_divide(std::vector<std::int64_t> a,
                                       const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

std::vector<std::int64_t> substitute_power(const std::vector<std::int64_t>& a, u64 e) {
  std::vector<std::int64_t> out((a.size() - 1) * e + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i * e] = a[i];
  return out;
}

template <class Int>
std::optional<Int> parse_int(std::string_view text) {
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(u64 k) {
  if (k == 0) throw PreconditionError("cyclotomic polynomial needs k >= 1");
  // Phi_{np}(x) = Phi_n(x^p) / Phi_n(x) for p not dividing n, then
  // Phi_k(x) = Phi_rad(k)(x^(k / rad(k))).
  std::vector<std::int64_t> phi{-1, 1};
  u64 rad = 1;
  for (u64 p : prime_divisors(k)) {
    phi = exact_divide(substitute_power(phi, p), phi);
    rad *= p;
  }
  return substitute_power(phi, k / rad);
}

GaloisContext cyclotomic_context(u64 k) {
  if (k == 0 || k > kMaxCyclotomicK) {
    throw PreconditionError("cyclotomic context needs 1 <= k <= " +
                            std::to_string(kMaxCyclotomicK));
  }
  std::vector<ConjClassSpec> classes;
  for (u64 r = 0; r < k; ++r) {
    if (std::gcd(r, k) != 1) continue;
    classes.push_back({std::to_string(r), "p = " + std::to_string(r) + " mod " + std::to_string(k),
                       1, {r}, std::nullopt});
  }
  return GaloisContext::create("cyclotomic:" + std::to_string(k), cyclotomic_polynomial(k),
                               euler_phi(k), std::move(classes), ClassifierMode::residue, k,
                               prime_divisors(k));
}

GaloisContext quadratic_context(std::int64_t d) {
  const u64 ad = d < 0 ? static_cast<u64>(-(d + 1)) + 1 : static_cast<u64>(d);
  if (d >= 0) {
    u64 r = 0;
    while ((r + 1) * (r + 1) <= ad) ++r;
    if (r * r == ad) {
      throw PreconditionError("quadratic context needs d not a perfect square, got " +
                              std::to_string(d));
    }
  }
  std::vector<u64> excluded = prime_divisors(ad);
  excluded.push_back(2);
  std::vector<ConjClassSpec> classes{
      {"split", "p splits", 1, {}, CycleType::of({1, 1})},
      {"inert", "p is inert", 1, {}, CycleType::of({2})},
  };
  return GaloisContext::create("quadratic:" + std::to_string(d), {-d, 0, 1}, 2,
                               std::move(classes), ClassifierMode::cycle_type, 0,
                               std::move(excluded));
}

GaloisContext s3_x3_2_context() {
  std::vector<ConjClassSpec> classes{
      {"identity", "identity", 1, {}, CycleType::of({1, 1, 1})},
      {"transpositions", "transpositions", 3, {}, CycleType::of({1, 2})},
      {"3-cycles", "3-cycles", 2, {}, CycleType::of({3})},
  };
  // disc(x^3 - 2) = -108 = -2^2 3^3
  return GaloisContext::create("s3-x3-2", {-2, 0, 0, 1}, 6, std::move(classes),
                               ClassifierMode::cycle_type, 0, {2, 3});
}

std::optional<GaloisContext> preset_context(std::string_view selector) {
  if (selector == "s3-x3-2") return s3_x3_2_context();
  constexpr std::string_view cyc = "cyclotomic:";
  constexpr std::string_view quad = "quadratic:";
  if (selector.starts_with(cyc)) {
    const auto k = parse_int<u64>(selector.substr(cyc.size()));
    if (!k) throw ConfigError("bad cyclotomic selector '" + std::string(selector) + "'");
    return cyclotomic_context(*k);
  }
  if (selector.starts_with(quad)) {
    const auto d = parse_int<std::int64_t>(selector.substr(quad.size()));
    if (!d) throw ConfigError("bad quadratic selector '" + std::string(selector) + "'");
    return quadratic_context(*d);
  }
  return std::nullopt;
}

GaloisContext resolve_context(std::string_view selector) {
  if (auto ctx = preset_context(selector)) return std::move(*ctx);
  return load_context_file(std::string(selector));
}

}  // namespace chebdense
