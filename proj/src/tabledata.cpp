#include "kcg/tabledata.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "kcg/foxmilnor.hpp"

namespace kcg {
namespace {

constexpr std::size_t kFieldCount = 10;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw Error("unterminated quote");
  out.push_back(trim(cur));
  return out;
}

int parse_int(const std::string& text, const char* field) {
  int v = 0;
  const auto* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data() + (!text.empty() && text[0] == '+'), end, v);
  if (text.empty() || ec != std::errc() || p != end) throw Error(std::string("bad integer in ") + field);
  return v;
}

std::vector<std::string> split_plus(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const auto end = text.find('+', pos);
    auto part = trim(std::string_view(text).substr(pos, end == std::string::npos ? std::string::npos : end - pos));
    if (part.empty()) throw Error("bad concordant_to");
    out.push_back(std::move(part));
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return out;
}

KnotRecord parse_row(const std::vector<std::string>& f) {
  if (f.size() != kFieldCount) throw Error("expected 10 fields, got " + std::to_string(f.size()));
  KnotRecord k;
  if (f[0].empty()) throw Error("empty name");
  k.name = f[0];
  k.crossings = parse_int(f[1], "crossings");
  k.alexander = LaurentPoly::parse(f[2]);
  if (abs(eval_int(k.alexander, 1)) != 1) throw Error("not a knot polynomial");
  k.signature = parse_int(f[3], "signature");
  k.genus3 = parse_int(f[4], "genus3");
  k.genus4_lo = f[5].empty() ? (std::abs(k.signature) + 1) / 2 : parse_int(f[5], "genus4_min");
  k.genus4_hi = f[6].empty() ? k.genus3 : parse_int(f[6], "genus4_max");
  const auto status = parse_slice_status(f[7]);
  if (!status) throw Error("bad slice status '" + f[7] + "'");
  k.slice_status = *status;
  if (!f[8].empty()) k.seifert = SeifertMatrix::parse(f[8]);
  k.concordant_to = split_plus(f[9]);
  validate(k);
  return k;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

using FactorCounts = std::map<LaurentPoly, int>;

FactorCounts counts_of(const LaurentPoly& p) {
  FactorCounts out;
  for (const auto& [q, m] : factor(p).factors) out[q] += m;
  return out;
}

bool contains(const FactorCounts& big, const FactorCounts& small) {
  for (const auto& [q, m] : small) {
    const auto it = big.find(q);
    if (it == big.end() || it->second < m) return false;
  }
  return true;
}

// Mirror assignment (bit i set = summand i mirrored) reaching `target`,
// preferring fewer mirrors and then lower masks.
std::optional<std::vector<bool>> mirror_assignment(const std::vector<int>& sigmas, int target) {
  const std::size_t n = sigmas.size();
  std::vector<unsigned> masks(1u << n);
  for (unsigned m = 0; m < masks.size(); ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  for (unsigned m : masks) {
    int s = 0;
    for (std::size_t i = 0; i < n; ++i) s += (m >> i & 1) ? -sigmas[i] : sigmas[i];
    if (s == target) {
      std::vector<bool> out(n);
      for (std::size_t i = 0; i < n; ++i) out[i] = m >> i & 1;
      return out;
    }
  }
  return std::nullopt;
}

CensusRow census_row(const KnotRecord& k, const CensusOptions& opt, const GenusLookup& lookup) {
  CensusRow row;
  row.name = k.name;
  try {
    row.bounds = gc_bounds(k);
    row.category = classify(k, row.bounds, lookup);
    if (opt.candidates && row.category == Category::unknown)
      for (const auto& m : match_candidates(k, *opt.candidates, opt.max_summands))
        row.candidates.push_back(m.expression());
  } catch (const Error& e) {
    throw Error(k.name + ": " + e.what());
  }
  return row;
}

}  // namespace

const KnotRecord* KnotTable::find(std::string_view name) const {
  for (const auto& r : records)
    if (r.name == name) return &r;
  return nullptr;
}

KnotTable parse_table(std::istream& in, std::string source_path) {
  KnotTable table;
  table.source_path = std::move(source_path);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int rows = 0;
  std::set<std::string> names;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (!have_header) {
      std::vector<std::string> cols;
      try {
        cols = split_csv(t);
      } catch (const Error&) {
        throw Error("bad schema");
      }
      std::string joined;
      for (std::size_t i = 0; i < cols.size(); ++i) joined += (i ? "," : "") + cols[i];
      if (joined != kTableHeader) throw Error("bad schema");
      have_header = true;
      continue;
    }
    ++rows;
    try {
      auto rec = parse_row(split_csv(line));
      if (!names.insert(rec.name).second) throw Error("duplicate name");
      table.records.push_back(std::move(rec));
    } catch (const Error& e) {
      table.rejected.push_back({lineno, e.what()});
    }
  }
  if (!have_header) throw Error("bad schema");
  if (rows == 0) {
    table.warnings.push_back("no records");
  } else if (table.records.empty()) {
    const auto& first = table.rejected.front();
    throw Error("no valid rows; line " + std::to_string(first.line) + ": " + first.reason);
  }
  return table;
}

KnotTable parse_table(std::string_view text, std::string source_path) {
  std::istringstream in{std::string(text)};
  return parse_table(in, std::move(source_path));
}

KnotTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_table(in, path);
}

std::string serialize(const KnotTable& table) {
  std::string out(kTableHeader);
  out += '\n';
  for (const auto& k : table.records) {
    std::string concordant;
    for (std::size_t i = 0; i < k.concordant_to.size(); ++i) concordant += (i ? "+" : "") + k.concordant_to[i];
    out += csv_field(k.name) + ',' + std::to_string(k.crossings) + ',' + k.alexander.to_string() + ',' +
           std::to_string(k.signature) + ',' + std::to_string(k.genus3) + ',' + std::to_string(k.genus4_lo) +
           ',' + std::to_string(k.genus4_hi) + ',' + std::string(to_string(k.slice_status)) + ',' +
           (k.seifert ? "\"" + k.seifert->to_string() + "\"" : "") + ',' + concordant + '\n';
  }
  return out;
}

GenusLookup make_genus_lookup(const std::vector<const KnotTable*>& tables) {
  auto genus = std::make_shared<std::unordered_map<std::string, int>>();
  for (const auto* t : tables)
    if (t)
      for (const auto& r : t->records) genus->emplace(r.name, r.genus3);
  return [genus](const std::string& name) -> std::optional<int> {
    const auto it = genus->find(name);
    if (it == genus->end()) return std::nullopt;
    return it->second;
  };
}

std::string CandidateMatch::expression() const {
  std::string out;
  for (std::size_t i = 0; i < summands.size(); ++i) out += (i ? "+" : "") + summands[i];
  return out;
}

std::vector<CandidateMatch> match_candidates(const KnotRecord& k, const KnotTable& candidates, int max_summands) {
  std::optional<SignatureProfile> profile;
  if (k.seifert) profile = signature_profile(*k.seifert);
  const auto required = counts_of(enhanced_required_factors(factor(k.alexander), profile).enhanced);

  struct Entry {
    const KnotRecord* rec;
    FactorCounts factors;
  };
  std::vector<Entry> pool;
  for (const auto& r : candidates.records)
    if (r.genus3 > 0) pool.push_back({&r, counts_of(r.alexander)});

  std::vector<CandidateMatch> out;
  std::vector<std::size_t> pick;
  // Nondecreasing index tuples, pruned once the genus budget is spent.
  auto extend = [&](auto&& self, std::size_t from, int genus) -> void {
    if (!pick.empty()) {
      FactorCounts combined;
      std::vector<int> sigmas;
      for (auto i : pick) {
        for (const auto& [q, m] : pool[i].factors) combined[q] += m;
        sigmas.push_back(pool[i].rec->signature);
      }
      if (contains(combined, required))
        if (auto mirrors = mirror_assignment(sigmas, k.signature)) {
          CandidateMatch m;
          m.mirrored = *mirrors;
          for (std::size_t j = 0; j < pick.size(); ++j) {
            const auto& r = *pool[pick[j]].rec;
            m.summands.push_back(r.name);
            m.alexander = mul(m.alexander, r.alexander);
            m.signature += m.mirrored[j] ? -r.signature : r.signature;
            m.genus3 += r.genus3;
            m.crossings += r.crossings;
          }
          out.push_back(std::move(m));
        }
    }
    if (static_cast<int>(pick.size()) == max_summands) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (genus + pool[i].rec->genus3 >= k.genus3) continue;
      pick.push_back(i);
      self(self, i, genus + pool[i].rec->genus3);
      pick.pop_back();
    }
  };
  extend(extend, 0, 0);

  for (auto& m : out) {
    // Summand names in a canonical order so the expression is stable.
    std::vector<std::size_t> order(m.summands.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return m.summands[a] < m.summands[b]; });
    std::vector<std::string> names;
    std::vector<bool> mir;
    for (auto i : order) {
      names.push_back(m.summands[i]);
      mir.push_back(m.mirrored[i]);
    }
    m.summands = std::move(names);
    m.mirrored = std::move(mir);
  }
  std::stable_sort(out.begin(), out.end(), [](const CandidateMatch& a, const CandidateMatch& b) {
    if (a.genus3 != b.genus3) return a.genus3 < b.genus3;
    if (a.crossings != b.crossings) return a.crossings < b.crossings;
    return a.expression() < b.expression();
  });
  return out;
}

CensusReport census(const KnotTable& table, const CensusOptions& options) {
  const GenusLookup lookup = options.genus_of ? options.genus_of : make_genus_lookup({&table});
  const std::size_t n = table.records.size();
  std::vector<CensusRow> rows(n);
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(std::max<std::size_t>(n, 1))));

  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) rows[i] = census_row(table.records[i], options, lookup);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w)
      workers.emplace_back([&] {
        for (std::size_t i; (i = next++) < n;) {
          try {
            rows[i] = census_row(table.records[i], options, lookup);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    for (auto& t : workers) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  CensusReport report;
  for (auto c : kAllCategories) report.counts[c] = 0;
  for (const auto& r : rows) ++report.counts[r.category];
  report.total = static_cast<int>(n);
  report.rows = std::move(rows);
  return report;
}

std::string report_tsv(const CensusReport& report) {
  std::string out = "name\tgc_lower\tgc_upper\tcategory\tcontributors\tcandidates\n";
  for (const auto& r : report.rows) {
    std::string contributors;
    for (std::size_t i = 0; i < r.bounds.contributors.size(); ++i) {
      const auto& c = r.bounds.contributors[i];
      contributors += (i ? "," : "") + std::string(to_string(c.source)) + ':' + std::to_string(c.value);
    }
    std::string cands;
    for (std::size_t i = 0; i < r.candidates.size(); ++i) cands += (i ? "," : "") + r.candidates[i];
    out += r.name + '\t' + std::to_string(r.bounds.lower) + '\t' + std::to_string(r.bounds.upper) + '\t' +
           std::string(to_string(r.category)) + '\t' + contributors + '\t' + (cands.empty() ? "-" : cands) + '\n';
  }
  return out;
}

std::string summary_text(const CensusReport& report) {
  std::string out;
  for (auto c : kAllCategories) out += std::string(to_string(c)) + '\t' + std::to_string(report.counts.at(c)) + '\n';
  out += "total\t" + std::to_string(report.total) + '\n';
  return out;
}

}  // namespace kcg
