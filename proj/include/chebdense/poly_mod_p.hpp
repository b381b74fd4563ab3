#pragma once

// Dense univariate polynomials over Z/p, p prime below 2^63. Products go
// through 128-bit intermediates, so any 64-bit modulus is overflow-free.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chebdense {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p);
u64 pow_mod(u64 base, u64 exp, u64 p);
// Inverse of a nonzero residue modulo prime p.
u64 inv_mod(u64 a, u64 p);

class PolyModP {
 public:
  explicit PolyModP(u64 modulus);
  // Coefficients lowest degree first; reduced mod p and trimmed.
  PolyModP(u64 modulus, std::vector<u64> coeffs);

  // Reduction of an integer polynomial (lowest degree first).
  static PolyModP from_integers(u64 modulus, std::span<const std::int64_t> coeffs);
  static PolyModP x(u64 modulus);

  u64 modulus() const { return p_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  u64 leading() const { return c_.empty() ? 0 : c_.back(); }
  u64 coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  const std::vector<u64>& coeffs() const { return c_; }

  std::string to_string() const;

  friend bool operator==(const PolyModP&, const PolyModP&) = default;

 private:
  void trim();

  u64 p_;
  std::vector<u64> c_;
};

PolyModP operator+(const PolyModP& a, const PolyModP& b);
PolyModP operator-(const PolyModP& a, const PolyModP& b);
PolyModP operator*(const PolyModP& a, const PolyModP& b);

// Quotient and remainder; throws PreconditionError on division by zero.
std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b);
PolyModP operator%(const PolyModP& a, const PolyModP& b);

PolyModP monic(const PolyModP& a);
PolyModP derivative(const PolyModP& a);

// Monic gcd by Euclidean remainders; gcd(0, 0) = 0. Throws on modulus mismatch.
PolyModP poly_gcd(const PolyModP& a, const PolyModP& b);

// a * b mod f and base^exp mod f.
PolyModP mul_mod(const PolyModP& a, const PolyModP& b, const PolyModP& f);
PolyModP pow_mod(const PolyModP& base, u64 exp, const PolyModP& f);

// x^(p^d) mod f by d successive p-th powers. f monic of degree >= 1.
PolyModP frobenius_power(const PolyModP& f, unsigned d);

// True iff gcd(f, f') is constant. Requires deg f >= 1.
bool is_squarefree_mod_p(const PolyModP& f);

// Multiset of irreducible factor degrees, non-decreasing.
struct CycleType {
  std::vector<unsigned> parts;

  unsigned total() const;
  // Dash-joined parts, e.g. "1-2".
  std::string to_string() const;
  // Parses "1-2" or a list; sorts the parts. Throws ConfigError when malformed.
  static CycleType parse(const std::string& text);
  static CycleType of(std::vector<unsigned> parts);

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

// Distinct-degree factorization pattern of a monic squarefree f.
// Throws PreconditionError when f is not squarefree.
CycleType ddf_pattern(const PolyModP& f);

}  // namespace chebdense
