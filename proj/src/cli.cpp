#include "kcg/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "kcg/foxmilnor.hpp"
#include "kcg/tabledata.hpp"

namespace kcg::cli {
namespace {

std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  return buf;
}

std::string one_line(std::string s) {
  for (auto& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

struct Options {
  std::string poly;
  std::string seifert;
  std::string name;
  std::string table;
  std::string report;
  std::vector<std::string> reference;
  std::string candidates;
  int jobs = 1;
  int max_summands = 2;
};

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  KnotTable table(const std::string& path) {
    auto t = path == "-" ? parse_table(in_, "-") : load_table(path);
    for (const auto& r : t.rejected) err_ << "warning: " << path << ":" << r.line << ": " << one_line(r.reason) << '\n';
    for (const auto& w : t.warnings) err_ << "warning: " << path << ": " << w << '\n';
    return t;
  }

  const KnotRecord& lookup(const KnotTable& t, const std::string& name) {
    const auto* k = t.find(name);
    if (!k) throw Error("knot '" + name + "' not in table");
    return *k;
  }

  void factor_cmd(const Options& o) { out_ << factor(LaurentPoly::parse(o.poly)).to_string() << '\n'; }

  void invariants_cmd(const Options& o) {
    const auto v = SeifertMatrix::parse(o.seifert);
    const auto delta = alexander(v);
    const auto f = factor(delta);
    const auto profile = signature_profile(v);
    const auto req = enhanced_required_factors(f, profile);
    out_ << "alexander\t" << delta.to_string() << '\n'
         << "factorization\t" << f.to_string() << '\n'
         << "signature\t" << murasugi_signature(v) << '\n'
         << "residual\t" << req.residual.to_string() << '\n'
         << "enhanced\t" << req.enhanced.to_string() << '\n'
         << "poly_bound\t" << gc_poly_lower_bound(req) << '\n';
    for (const auto& j : profile.jump_points)
      out_ << "jump\t" << fixed(j.angle) << '\t' << j.jump << '\t' << j.averaged << '\n';
  }

  void bound_cmd(const Options& o) {
    const auto t = table(o.table);
    const auto& k = lookup(t, o.name);
    const auto b = gc_bounds(k);
    std::string contributors;
    for (std::size_t i = 0; i < b.contributors.size(); ++i)
      contributors += (i ? "," : "") + std::string(to_string(b.contributors[i].source)) + ':' +
                      std::to_string(b.contributors[i].value);
    out_ << k.name << ' ' << b.lower << ' ' << b.upper << ' ' << to_string(b.status) << ' ' << contributors
         << '\n';
  }

  void census_cmd(const Options& o) {
    const auto t = table(o.table);
    std::vector<KnotTable> refs;
    for (const auto& r : o.reference) refs.push_back(table(r));
    std::optional<KnotTable> cands;
    if (!o.candidates.empty()) cands = table(o.candidates);

    std::vector<const KnotTable*> genus_sources{&t};
    for (const auto& r : refs) genus_sources.push_back(&r);
    if (cands) genus_sources.push_back(&*cands);

    CensusOptions opt;
    opt.genus_of = make_genus_lookup(genus_sources);
    opt.candidates = cands ? &*cands : nullptr;
    opt.max_summands = o.max_summands;
    opt.jobs = o.jobs;
    const auto report = census(t, opt);
    if (!o.report.empty()) {
      std::ofstream f(o.report);
      if (!f) throw Error("cannot write " + o.report);
      f << report_tsv(report);
      if (!f) throw Error("cannot write " + o.report);
    }
    out_ << summary_text(report);
  }

  void match_cmd(const Options& o) {
    const auto t = table(o.table);
    const auto c = table(o.candidates);
    for (const auto& m : match_candidates(lookup(t, o.name), c, o.max_summands))
      out_ << m.expression() << '\t' << m.genus3 << '\t' << m.crossings << '\t' << m.signature << '\n';
  }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Concordance-genus bounds from classical knot invariants", "kcg"};
  app.require_subcommand(1);
  Options o;

  auto* factor_sc = app.add_subcommand("factor", "Factor a Laurent polynomial over the integers");
  factor_sc->add_option("--poly", o.poly, "Coefficients c0;c1;...;cd")->required();

  auto* inv = app.add_subcommand("invariants", "Alexander polynomial, signatures and jumps of a Seifert matrix");
  inv->add_option("--seifert", o.seifert, "Rows separated by ';', entries by ','")->required();

  auto* bound = app.add_subcommand("bound", "Concordance-genus bounds for one knot");
  bound->add_option("--name", o.name, "Knot name")->required();
  bound->add_option("--table", o.table, "Knot table CSV ('-' for stdin)")->required();

  auto* cen = app.add_subcommand("census", "Classify every knot in a table");
  cen->add_option("--table", o.table, "Knot table CSV ('-' for stdin)")->required();
  cen->add_option("--report", o.report, "Write the per-knot TSV report here");
  cen->add_option("--reference", o.reference, "Extra tables for resolving concordant_to genera");
  cen->add_option("--candidates", o.candidates, "Candidate table for matching unknown knots");
  cen->add_option("--max-summands", o.max_summands, "Largest knot sum to consider")->check(CLI::PositiveNumber);
  cen->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* match = app.add_subcommand("match", "Candidate concordances for one knot");
  match->add_option("--name", o.name, "Knot name")->required();
  match->add_option("--table", o.table, "Knot table CSV ('-' for stdin)")->required();
  match->add_option("--candidates", o.candidates, "Candidate table CSV")->required();
  match->add_option("--max-summands", o.max_summands, "Largest knot sum to consider")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {  // --help
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << one_line(e.what()) << '\n';
    return kExitUsage;
  }

  Runner runner(in, out, err);
  try {
    if (factor_sc->parsed()) runner.factor_cmd(o);
    if (inv->parsed()) runner.invariants_cmd(o);
    if (bound->parsed()) runner.bound_cmd(o);
    if (cen->parsed()) runner.census_cmd(o);
    if (match->parsed()) runner.match_cmd(o);
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace kcg::cli
