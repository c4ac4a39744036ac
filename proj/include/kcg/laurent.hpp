#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace kcg {

using Integer = mpz_class;

/// Domain failure: bad polynomial, inconsistent record, numeric breakdown.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer Laurent polynomial held in canonical form.
///
/// Two polynomials that agree up to multiplication by a unit +-t^k share one
/// canonical representative: lowest exponent 0, nonzero leading and trailing
/// coefficients, positive constant term. The zero polynomial has no
/// canonical form and cannot be represented.
class LaurentPoly {
 public:
  /// The constant polynomial 1.
  LaurentPoly();

  /// Strips zeros, drops the t^k shift and fixes the sign.
  /// Throws Error("zero polynomial has no canonical form") on all-zero input.
  static LaurentPoly canonicalize(std::vector<Integer> coeffs, long offset = 0);

  /// Reads the `c0;c1;...;cd` encoding (lowest degree first) and canonicalizes.
  static LaurentPoly parse(std::string_view text);

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  /// `c0;c1;...;cd`.
  std::string to_string() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  /// Orders by degree, then lexicographically by coefficients (lowest first).
  friend std::strong_ordering operator<=>(const LaurentPoly& a,
                                          const LaurentPoly& b);

 private:
  explicit LaurentPoly(std::vector<Integer> canonical_coeffs);
  std::vector<Integer> coeffs_;
};

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

/// Canonical form of p(t^-1).
LaurentPoly reciprocal(const LaurentPoly& p);

/// True iff p and p(t^-1) agree up to a unit.
bool is_symmetric(const LaurentPoly& p);

/// Value of the polynomial part at an integer point.
Integer eval_int(const LaurentPoly& p, const Integer& x);

/// Quotient a / b when b divides a over the integers (up to a unit),
/// canonicalized; nullopt otherwise.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a,
                                        const LaurentPoly& b);

struct FactorPower {
  LaurentPoly factor;
  int multiplicity = 1;

  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// unit * prod(factor^multiplicity), factors irreducible over Z and sorted.
struct Factorization {
  int unit = 1;
  std::vector<FactorPower> factors;

  LaurentPoly expand() const;
  /// Exactly one factor, with multiplicity one.
  bool is_irreducible() const noexcept {
    return factors.size() == 1 && factors.front().multiplicity == 1;
  }
  /// `(1;-3;1)^1 * (1;-3;5;-3;1)^1`; `1` for the empty product.
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

inline constexpr int kMaxFactorDegree = 64;

/// Complete factorization into irreducibles over the integers.
/// Throws Error("degree limit exceeded") above kMaxFactorDegree.
Factorization factor(const LaurentPoly& p);

}  // namespace kcg
