#include "chebdense/poly_mod_p.hpp"

#include <algorithm>
#include <sstream>

#include "chebdense/errors.hpp"

namespace chebdense {

u64 mul_mod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) {
  if (a % p == 0) throw PreconditionError("zero has no inverse mod " + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

namespace {

u64 add_mod(u64 a, u64 b, u64 p) {
  const u64 s = a + b;
  return (s >= p || s < a) ? s - p : s;
}

u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

void require_same_modulus(const PolyModP& a, const PolyModP& b) {
  if (a.modulus() != b.modulus()) {
    throw PreconditionError("polynomial modulus mismatch: " + std::to_string(a.modulus()) +
                            " vs " + std::to_string(b.modulus()));
  }
}

}  // namespace

PolyModP::PolyModP(u64 modulus) : p_(modulus) {
  if (modulus < 2) throw PreconditionError("polynomial modulus must be >= 2");
}

PolyModP::PolyModP(u64 modulus, std::vector<u64> coeffs) : PolyModP(modulus) {
  c_ = std::move(coeffs);
  for (auto& c : c_) c %= p_;
  trim();
}

PolyModP PolyModP::from_integers(u64 modulus, std::span<const std::int64_t> coeffs) {
  std::vector<u64> reduced;
  reduced.reserve(coeffs.size());
  const auto sp = static_cast<__int128>(modulus);
  for (std::int64_t c : coeffs) {
    __int128 r = static_cast<__int128>(c) % sp;
    if (r < 0) r += sp;
    reduced.push_back(static_cast<u64>(r));
  }
  return PolyModP(modulus, std::move(reduced));
}

PolyModP PolyModP::x(u64 modulus) { return PolyModP(modulus, {0, 1}); }

void PolyModP::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::string PolyModP::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c_[i] != 1 || i == 0) os << c_[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  os << " (mod " << p_ << ")";
  return os.str();
}

PolyModP operator+(const PolyModP& a, const PolyModP& b) {
  require_same_modulus(a, b);
  const u64 p = a.modulus();
  std::vector<u64> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = add_mod(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)), p);
  }
  return PolyModP(p, std::move(c));
}

PolyModP operator-(const PolyModP& a, const PolyModP& b) {
  require_same_modulus(a, b);
  const u64 p = a.modulus();
  std::vector<u64> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = sub_mod(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)), p);
  }
  return PolyModP(p, std::move(c));
}

PolyModP operator*(const PolyModP& a, const PolyModP& b) {
  require_same_modulus(a, b);
  const u64 p = a.modulus();
  if (a.is_zero() || b.is_zero()) return PolyModP(p);
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<u64> c(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      c[i + j] = add_mod(c[i + j], mul_mod(ac[i], bc[j], p), p);
    }
  }
  return PolyModP(p, std::move(c));
}

std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b) {
  require_same_modulus(a, b);
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  const u64 p = a.modulus();
  if (a.degree() < b.degree()) return {PolyModP(p), a};

  std::vector<u64> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const u64 lead_inv = inv_mod(b.leading(), p);
  std::vector<u64> quot(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (int i = a.degree(); i >= db; --i) {
    const u64 q = mul_mod(rem[i], lead_inv, p);
    quot[i - db] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[i - db + j] = sub_mod(rem[i - db + j], mul_mod(q, bc[j], p), p);
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {PolyModP(p, std::move(quot)), PolyModP(p, std::move(rem))};
}

PolyModP operator%(const PolyModP& a, const PolyModP& b) { return divmod(a, b).second; }

PolyModP monic(const PolyModP& a) {
  if (a.is_zero()) return a;
  const u64 p = a.modulus();
  const u64 inv = inv_mod(a.leading(), p);
  std::vector<u64> c = a.coeffs();
  for (auto& v : c) v = mul_mod(v, inv, p);
  return PolyModP(p, std::move(c));
}

PolyModP derivative(const PolyModP& a) {
  const u64 p = a.modulus();
  if (a.degree() < 1) return PolyModP(p);
  std::vector<u64> c(static_cast<std::size_t>(a.degree()), 0);
  for (int i = 1; i <= a.degree(); ++i) {
    c[i - 1] = mul_mod(a.coeff(i), static_cast<u64>(i) % p, p);
  }
  return PolyModP(p, std::move(c));
}

PolyModP poly_gcd(const PolyModP& a, const PolyModP& b) {
  require_same_modulus(a, b);
  PolyModP u = a;
  PolyModP v = b;
  while (!v.is_zero()) {
    PolyModP r = u % v;
    u = std::move(v);
    v = std::move(r);
  }
  return monic(u);
}

PolyModP mul_mod(const PolyModP& a, const PolyModP& b, const PolyModP& f) { return (a * b) % f; }

PolyModP pow_mod(const PolyModP& base, u64 exp, const PolyModP& f) {
  PolyModP result = PolyModP(f.modulus(), {1}) % f;
  PolyModP b = base % f;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, b, f);
    exp >>= 1;
    if (exp > 0) b = mul_mod(b, b, f);
  }
  return result;
}

PolyModP frobenius_power(const PolyModP& f, unsigned d) {
  if (f.degree() < 1) throw PreconditionError("frobenius_power needs deg f >= 1");
  if (d == 0) throw PreconditionError("frobenius_power needs d >= 1");
  const PolyModP g = monic(f);
  PolyModP h = PolyModP::x(f.modulus()) % g;
  for (unsigned i = 0; i < d; ++i) h = pow_mod(h, f.modulus(), g);
  return h;
}

bool is_squarefree_mod_p(const PolyModP& f) {
  if (f.degree() < 1) throw PreconditionError("is_squarefree_mod_p needs deg f >= 1");
  return poly_gcd(f, derivative(f)).degree() == 0;
}

unsigned CycleType::total() const {
  unsigned s = 0;
  for (unsigned v : parts) s += v;
  return s;
}

std::string CycleType::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(parts[i]);
  }
  return out;
}

CycleType CycleType::of(std::vector<unsigned> parts) {
  for (unsigned v : parts) {
    if (v == 0) throw ConfigError("cycle type parts must be positive");
  }
  std::sort(parts.begin(), parts.end());
  return CycleType{std::move(parts)};
}

CycleType CycleType::parse(const std::string& text) {
  std::vector<unsigned> parts;
  std::size_t pos = 0;
  if (text.empty()) throw ConfigError("empty cycle type");
  while (pos <= text.size()) {
    const std::size_t dash = text.find('-', pos);
    const std::string token = text.substr(pos, dash == std::string::npos ? dash : dash - pos);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
      throw ConfigError("malformed cycle type '" + text + "'");
    }
    parts.push_back(static_cast<unsigned>(std::stoul(token)));
    if (dash == std::string::npos) break;
    pos = dash + 1;
  }
  return of(std::move(parts));
}

CycleType ddf_pattern(const PolyModP& f) {
  if (f.degree() < 1) throw PreconditionError("ddf_pattern needs deg f >= 1");
  if (!is_squarefree_mod_p(f)) {
    throw PreconditionError("ddf_pattern needs a squarefree polynomial, got " + f.to_string());
  }
  const u64 p = f.modulus();
  const PolyModP x = PolyModP::x(p);
  PolyModP rest = monic(f);
  PolyModP h = x % rest;
  std::vector<unsigned> parts;
  for (unsigned d = 1; rest.degree() >= 2 * static_cast<int>(d); ++d) {
    h = pow_mod(h, p, rest);
    const PolyModP g = poly_gcd(rest, h - x);
    if (g.degree() > 0) {
      const unsigned count = static_cast<unsigned>(g.degree()) / d;
      parts.insert(parts.end(), count, d);
      rest = divmod(rest, g).first;
      h = h % rest;
    }
  }
  if (rest.degree() >= 1) parts.push_back(static_cast<unsigned>(rest.degree()));
  std::sort(parts.begin(), parts.end());
  return CycleType{std::move(parts)};
}

}  // namespace chebdense
