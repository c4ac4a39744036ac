#include "kcg/bounds.hpp"

#include <algorithm>
#include <cstdlib>

#include "kcg/foxmilnor.hpp"

namespace kcg {
namespace {

[[noreturn]] void inconsistent(const KnotRecord& k, const std::string& why) {
  throw Error("inconsistent knot record: " + k.name + ": " + why);
}

}  // namespace

std::string_view to_string(SliceStatus s) {
  switch (s) {
    case SliceStatus::slice:
      return "slice";
    case SliceStatus::not_slice:
      return "not_slice";
    case SliceStatus::unknown:
      return "unknown";
  }
  return "";
}

std::optional<SliceStatus> parse_slice_status(std::string_view text) {
  for (auto s : {SliceStatus::slice, SliceStatus::not_slice, SliceStatus::unknown})
    if (text == to_string(s)) return s;
  return std::nullopt;
}

std::string_view to_string(BoundSource s) {
  switch (s) {
    case BoundSource::genus4:
      return "genus4";
    case BoundSource::signature:
      return "signature";
    case BoundSource::polynomial:
      return "polynomial";
    case BoundSource::polynomial_jump:
      return "polynomial+jump";
    case BoundSource::slice:
      return "slice";
  }
  return "";
}

std::string_view to_string(GcStatus s) { return s == GcStatus::determined ? "determined" : "undetermined"; }

std::string_view to_string(Category c) {
  switch (c) {
    case Category::slice:
      return "slice";
    case Category::determined_irreducible_poly:
      return "determined_irreducible_poly";
    case Category::determined_poly_no_symmetric_pair:
      return "determined_poly_no_symmetric_pair";
    case Category::determined_signature_or_g4:
      return "determined_signature_or_g4";
    case Category::concordant_lower_genus:
      return "concordant_lower_genus";
    case Category::unknown:
      return "unknown";
  }
  return "";
}

void validate(const KnotRecord& k) {
  if (k.genus4_lo < 0 || k.genus4_lo > k.genus4_hi || k.genus4_hi > k.genus3)
    inconsistent(k, "genus bounds out of order");
  if (std::abs(k.signature) > 2 * k.genus4_hi) inconsistent(k, "|signature|/2 exceeds four-genus");
  if (k.alexander.degree() > 2 * k.genus3) inconsistent(k, "Alexander degree exceeds 2 g3");
  if (abs(eval_int(k.alexander, 1)) != 1) inconsistent(k, "not a knot polynomial");
  if (k.slice_status == SliceStatus::slice && k.genus4_lo > 0) inconsistent(k, "slice with positive four-genus");
  if (k.seifert && alexander(*k.seifert) != k.alexander) inconsistent(k, "Seifert matrix disagrees with Alexander polynomial");
}

GcBounds combine_bounds(int genus4_lo, int signature, int poly_bound, int genus3, bool jump_enhanced) {
  const BoundContributor candidates[] = {
      {BoundSource::genus4, genus4_lo},
      {BoundSource::signature, (std::abs(signature) + 1) / 2},
      {jump_enhanced ? BoundSource::polynomial_jump : BoundSource::polynomial, poly_bound},
  };
  GcBounds b;
  b.lower = 0;
  for (const auto& c : candidates) b.lower = std::max(b.lower, c.value);
  for (const auto& c : candidates)
    if (c.value == b.lower) b.contributors.push_back(c);
  b.upper = genus3;
  b.status = b.lower == b.upper ? GcStatus::determined : GcStatus::undetermined;
  return b;
}

GcBounds gc_bounds(const KnotRecord& k) {
  validate(k);
  if (k.slice_status == SliceStatus::slice)
    return GcBounds{0, 0, {{BoundSource::slice, 0}}, GcStatus::determined};
  std::optional<SignatureProfile> profile;
  if (k.seifert) profile = signature_profile(*k.seifert);
  const auto req = enhanced_required_factors(factor(k.alexander), profile);
  const bool jump = req.enhanced.degree() > req.residual.degree();
  auto b = combine_bounds(k.genus4_lo, k.signature, gc_poly_lower_bound(req), k.genus3, jump);
  if (b.lower > b.upper) inconsistent(k, "lower bound exceeds three-genus");
  return b;
}

Category classify(const KnotRecord& k, const GenusLookup& genus_of) { return classify(k, gc_bounds(k), genus_of); }

Category classify(const KnotRecord& k, const GcBounds& bounds, const GenusLookup& genus_of) {
  if (k.slice_status == SliceStatus::slice) return Category::slice;
  const auto f = factor(k.alexander);
  const bool half_degree_is_g3 = k.alexander.degree() == 2 * k.genus3;
  if (half_degree_is_g3 && f.is_irreducible()) return Category::determined_irreducible_poly;
  if (half_degree_is_g3 && !f.factors.empty() && residual(f) == k.alexander)
    return Category::determined_poly_no_symmetric_pair;
  if (bounds.status == GcStatus::determined) return Category::determined_signature_or_g4;
  if (!k.concordant_to.empty() && genus_of) {
    int total = 0;
    bool resolved = true;
    for (const auto& name : k.concordant_to) {
      const auto g = genus_of(name);
      if (!g) {
        resolved = false;
        break;
      }
      total += *g;
    }
    if (resolved && total < k.genus3) return Category::concordant_lower_genus;
  }
  return Category::unknown;
}

}  // namespace kcg
