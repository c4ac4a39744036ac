#pragma once

#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kcg/bounds.hpp"

namespace kcg {

inline constexpr std::string_view kTableHeader =
    "name,crossings,alexander,signature,genus3,genus4_min,genus4_max,slice,seifert,concordant_to";

struct RowIssue {
  int line = 0;
  std::string reason;
};

struct KnotTable {
  std::vector<KnotRecord> records;
  std::string source_path;
  std::vector<RowIssue> rejected;     // rows that failed validation
  std::vector<std::string> warnings;  // e.g. "no records"

  const KnotRecord* find(std::string_view name) const;
};

/// Parses the CSV schema in kTableHeader. `#` lines and blank lines are
/// skipped. Empty genus4 fields default to ceil(|sigma|/2) and g3.
/// Throws Error("bad schema") on a wrong header and Error when every row
/// is rejected; otherwise rejected rows are listed in `rejected`.
KnotTable parse_table(std::istream& in, std::string source_path = {});
KnotTable parse_table(std::string_view text, std::string source_path = {});

/// Reads a table file. Throws Error if the file cannot be opened.
KnotTable load_table(const std::string& path);

/// CSV text that parse_table reads back to the same records.
std::string serialize(const KnotTable& table);

/// Three-genus lookup over the records of several tables; earlier tables win.
GenusLookup make_genus_lookup(const std::vector<const KnotTable*>& tables);

struct CandidateMatch {
  std::vector<std::string> summands;  // sorted table names
  std::vector<bool> mirrored;         // one mirror assignment reaching sigma(k)
  LaurentPoly alexander;              // product of the summands' polynomials
  int signature = 0;                  // under `mirrored`
  int genus3 = 0;
  int crossings = 0;

  /// `3_1+4_1`; mirrors are not marked.
  std::string expression() const;
};

/// Knot sums of 1..max_summands candidate knots (repetition and mirrors
/// allowed, unknots skipped) whose combined Alexander polynomial contains
/// the required factors of k as a factor multiset, whose combined signature
/// equals sigma(k) for some mirror assignment, and whose combined g3 is
/// below g3(k). Sorted by g3, then total crossings, then expression.
std::vector<CandidateMatch> match_candidates(const KnotRecord& k, const KnotTable& candidates,
                                             int max_summands = 2);

struct CensusRow {
  std::string name;
  GcBounds bounds;
  Category category = Category::unknown;
  std::vector<std::string> candidates;
};

struct CensusReport {
  std::map<Category, int> counts;
  int total = 0;
  std::vector<CensusRow> rows;  // input order
};

struct CensusOptions {
  GenusLookup genus_of;                       // defaults to the table itself
  const KnotTable* candidates = nullptr;      // matcher input for unknown knots
  int max_summands = 2;
  int jobs = 1;
};

CensusReport census(const KnotTable& table, const CensusOptions& options = {});

/// TSV with header `name gc_lower gc_upper category contributors candidates`.
std::string report_tsv(const CensusReport& report);

/// One `category<TAB>count` line per category, then `total<TAB>n`.
std::string summary_text(const CensusReport& report);

}  // namespace kcg
