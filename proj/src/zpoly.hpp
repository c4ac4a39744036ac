#pragma once

// Dense univariate polynomial helpers over Z, Z/p (word-size p) and Z/m
// (arbitrary m). Coefficients are stored lowest degree first; the zero
// polynomial is the empty vector and every routine returns trimmed vectors.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace kcg::detail {

using Integer = mpz_class;
using ZPoly = std::vector<Integer>;

void trim(ZPoly& a);
inline int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const Integer& c);
ZPoly derivative(const ZPoly& a);

Integer content(const ZPoly& a);
/// a / content(a), sign chosen so the leading coefficient is positive.
ZPoly primitive_part(const ZPoly& a);

/// Quotient when b divides a in Z[x]; nullopt otherwise.
std::optional<ZPoly> exact_div(const ZPoly& a, const ZPoly& b);

/// Primitive gcd with positive leading coefficient (primitive PRS).
ZPoly gcd(const ZPoly& a, const ZPoly& b);

// ---- Z/p with p < 2^31 ----------------------------------------------------

using ModPoly = std::vector<std::int64_t>;

struct PrimeField {
  std::int64_t p;

  std::int64_t reduce(std::int64_t x) const {
    x %= p;
    return x < 0 ? x + p : x;
  }
  std::int64_t inverse(std::int64_t a) const;

  ModPoly from(const ZPoly& a) const;
  void trim(ModPoly& a) const;
  ModPoly sub(const ModPoly& a, const ModPoly& b) const;
  ModPoly mul(const ModPoly& a, const ModPoly& b) const;
  /// a = q*b + r; b nonzero.
  void divmod(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) const;
  ModPoly rem(const ModPoly& a, const ModPoly& b) const;
  ModPoly monic(const ModPoly& a) const;
  ModPoly gcd(ModPoly a, ModPoly b) const;
  ModPoly derivative(const ModPoly& a) const;
  /// Returns g = gcd(a, b) monic and sets s, t with s*a + t*b = g.
  ModPoly xgcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) const;
};

// ---- Z/m, arbitrary modulus -----------------------------------------------

struct ResidueRing {
  Integer m;

  ZPoly reduce(const ZPoly& a) const;
  ZPoly add(const ZPoly& a, const ZPoly& b) const;
  ZPoly sub(const ZPoly& a, const ZPoly& b) const;
  ZPoly mul(const ZPoly& a, const ZPoly& b) const;
  /// Division by a monic divisor.
  void divmod_monic(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r) const;
  /// Coefficients mapped into (-m/2, m/2].
  ZPoly symmetric(const ZPoly& a) const;
};

}  // namespace kcg::detail
