#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kcg/laurent.hpp"
#include "kcg/seifert.hpp"

namespace kcg {

enum class SliceStatus { slice, not_slice, unknown };

std::string_view to_string(SliceStatus s);
std::optional<SliceStatus> parse_slice_status(std::string_view text);

struct KnotRecord {
  std::string name;
  int crossings = 0;
  LaurentPoly alexander;
  int signature = 0;
  int genus3 = 0;
  int genus4_lo = 0;
  int genus4_hi = 0;
  SliceStatus slice_status = SliceStatus::unknown;
  std::optional<SeifertMatrix> seifert;
  std::vector<std::string> concordant_to;  // summands; empty when absent

  friend bool operator==(const KnotRecord&, const KnotRecord&) = default;
};

/// Throws Error("inconsistent knot record: <reason>") when the record breaks
/// 0 <= g4.lo <= g4.hi <= g3, |sigma|/2 <= g4.hi, deg Delta <= 2 g3,
/// |Delta(1)| = 1, or disagrees with its own Seifert matrix.
void validate(const KnotRecord& k);

enum class BoundSource { genus4, signature, polynomial, polynomial_jump, slice };

std::string_view to_string(BoundSource s);

struct BoundContributor {
  BoundSource source = BoundSource::genus4;
  int value = 0;

  friend bool operator==(const BoundContributor&, const BoundContributor&) = default;
};

enum class GcStatus { determined, undetermined };

std::string_view to_string(GcStatus s);

struct GcBounds {
  int lower = 0;
  int upper = 0;
  std::vector<BoundContributor> contributors;  // sources attaining `lower`
  GcStatus status = GcStatus::determined;

  friend bool operator==(const GcBounds&, const GcBounds&) = default;
};

/// Interval [max(g4.lo, |sigma|/2, poly_bound), g3] from precomputed inputs.
/// `jump_enhanced` tags the polynomial contribution as polynomial+jump.
GcBounds combine_bounds(int genus4_lo, int signature, int poly_bound, int genus3, bool jump_enhanced = false);

/// Validates, factors Delta, and uses the signature profile of the Seifert
/// matrix when one is present. Slice knots give [0, 0].
GcBounds gc_bounds(const KnotRecord& k);

enum class Category {
  slice,
  determined_irreducible_poly,
  determined_poly_no_symmetric_pair,
  determined_signature_or_g4,
  concordant_lower_genus,
  unknown,
};

inline constexpr Category kAllCategories[] = {
    Category::determined_irreducible_poly, Category::determined_poly_no_symmetric_pair,
    Category::determined_signature_or_g4,  Category::slice,
    Category::concordant_lower_genus,      Category::unknown,
};

std::string_view to_string(Category c);

/// Three-genus of a named knot, if known.
using GenusLookup = std::function<std::optional<int>(const std::string&)>;

/// First matching rule wins: slice, irreducible Delta of half-degree g3,
/// reducible Delta equal to its residual with half-degree g3, determined
/// bounds, concordance to a sum of smaller genus, unknown. A concordant_to
/// summand missing from `genus_of` leaves the rule unmet.
Category classify(const KnotRecord& k, const GenusLookup& genus_of = {});

/// Same, reusing bounds already computed for k.
Category classify(const KnotRecord& k, const GcBounds& bounds, const GenusLookup& genus_of = {});

}  // namespace kcg
