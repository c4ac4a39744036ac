#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "kcg/laurent.hpp"
#include "kcg/seifert.hpp"

namespace kcg {

enum class RequiredReason { odd_multiplicity_symmetric, signature_jump };

std::string_view to_string(RequiredReason r);

struct RequiredFactor {
  LaurentPoly factor;
  RequiredReason reason = RequiredReason::odd_multiplicity_symmetric;

  friend bool operator==(const RequiredFactor&, const RequiredFactor&) = default;
};

/// What any knot concordant to K must carry in its Alexander polynomial.
/// `residual` is g in the maximal decomposition Delta = g f f(t^-1);
/// `enhanced` additionally carries q^2 for each even-power symmetric factor q
/// at whose roots the signature function jumps.
struct RequiredFactors {
  LaurentPoly residual;
  LaurentPoly enhanced;
  std::vector<RequiredFactor> contributors;
};

/// Product of the symmetric irreducible factors of odd multiplicity.
/// Throws Error("polynomial not palindromic") if an asymmetric factor and
/// its reciprocal occur with different multiplicities.
LaurentPoly residual(const Factorization& f);

enum class SliceTest { pass, fail };

/// Fox-Milnor: pass iff the residual of Delta is 1.
SliceTest slice_obstruction(const LaurentPoly& delta);

/// Throws Error("inconsistent profile") if the profile has a jump at an
/// angle that is not a unit-circle root of any factor.
RequiredFactors enhanced_required_factors(const Factorization& f,
                                          const std::optional<SignatureProfile>& profile = std::nullopt);

/// Half the degree of the enhanced polynomial.
int gc_poly_lower_bound(const RequiredFactors& r);

}  // namespace kcg
