#include "kcg/foxmilnor.hpp"

#include <cmath>
#include <map>

#include "kcg/roots.hpp"

namespace kcg {
namespace {

// Jump records closer than this to a root angle belong to that root.
constexpr double kJumpMatchTolerance = 1e-6;

bool near_any(const std::vector<double>& angles, double theta) {
  for (double a : angles)
    if (std::fabs(a - theta) < kJumpMatchTolerance) return true;
  return false;
}

LaurentPoly power(const LaurentPoly& q, int m) {
  LaurentPoly out;
  for (int i = 0; i < m; ++i) out = mul(out, q);
  return out;
}

}  // namespace

std::string_view to_string(RequiredReason r) {
  switch (r) {
    case RequiredReason::odd_multiplicity_symmetric:
      return "odd-multiplicity-symmetric";
    case RequiredReason::signature_jump:
      return "signature-jump";
  }
  return "";
}

LaurentPoly residual(const Factorization& f) {
  std::map<LaurentPoly, int> mult;
  for (const auto& [q, m] : f.factors) mult[q] += m;
  LaurentPoly g;
  for (const auto& [q, m] : mult) {
    if (is_symmetric(q)) {
      if (m % 2) g = mul(g, q);
      continue;
    }
    const auto it = mult.find(reciprocal(q));
    if (it == mult.end() || it->second != m) throw Error("polynomial not palindromic");
  }
  return g;
}

SliceTest slice_obstruction(const LaurentPoly& delta) {
  return residual(factor(delta)).is_one() ? SliceTest::pass : SliceTest::fail;
}

RequiredFactors enhanced_required_factors(const Factorization& f,
                                          const std::optional<SignatureProfile>& profile) {
  RequiredFactors out;
  out.residual = residual(f);
  out.enhanced = out.residual;
  for (const auto& [q, m] : f.factors)
    if (m % 2 && is_symmetric(q))
      out.contributors.push_back({q, RequiredReason::odd_multiplicity_symmetric});
  if (!profile) return out;

  std::vector<std::vector<double>> angles;
  for (const auto& fp : f.factors)
    angles.push_back(fp.factor.degree() > 0 ? unit_circle_angles(fp.factor) : std::vector<double>{});

  for (const auto& j : profile->jump_points) {
    bool found = false;
    for (const auto& a : angles) found = found || near_any(a, j.angle);
    if (!found) throw Error("inconsistent profile");
  }

  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const auto& [q, m] = f.factors[i];
    if (m % 2 || !is_symmetric(q)) continue;
    bool jumps = false;
    for (const auto& j : profile->jump_points)
      if (std::abs(j.jump) >= 2 && near_any(angles[i], j.angle)) jumps = true;
    if (!jumps) continue;
    out.enhanced = mul(out.enhanced, power(q, 2));
    out.contributors.push_back({q, RequiredReason::signature_jump});
  }
  return out;
}

int gc_poly_lower_bound(const RequiredFactors& r) { return r.enhanced.degree() / 2; }

}  // namespace kcg
