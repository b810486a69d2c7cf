#include "ringlab/cli.hpp"

#include <CLI11.hpp>

#include "ringlab/constructions.hpp"
#include "ringlab/dsl.hpp"
#include "ringlab/report.hpp"
#include "ringlab/theorems.hpp"

namespace ringlab {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct Settings {
  std::string ring;
  std::vector<std::string> ideal;
  std::string delta = "id";
  int m = 2;
  int n = 1;
  bool weakly = false;
  std::string format = "text";

  std::vector<std::string> theorems;
  std::string catalog = "small";
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::optional<std::size_t> min_hits;
  std::optional<int> max_m;
  std::optional<int> absorbing_max_n;
  bool include_known_false = false;

  std::size_t trials = 1000;
  std::string conjecture;
};

void add_format(CLI::App* cmd, Settings& s) {
  cmd->add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void add_catalog(CLI::App* cmd, Settings& s) {
  cmd->add_option("--catalog", s.catalog, "\"small\" or a catalog file")->capture_default_str();
  cmd->add_option("--seed", s.seed, "Seed recorded in the report and used for sampling")
      ->capture_default_str();
  cmd->add_option("--workers", s.workers, "Worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  cmd->add_option("--max-m", s.max_m, "Largest m in the (m,n) grid (default 4)");
}

Catalog load_catalog(const Settings& s) {
  Catalog cat = Catalog::load(s.catalog);
  cat.seed = s.seed;
  if (s.min_hits) cat.min_hits = *s.min_hits;
  if (s.max_m) cat.max_m = *s.max_m;
  if (s.absorbing_max_n) cat.absorbing_max_n = *s.absorbing_max_n;
  return cat;
}

VerifyHeader header_of(const Catalog& cat) {
  return VerifyHeader{cat.name, cat.seed, cat.max_m, cat.absorbing_max_n, cat.min_hits};
}

int cmd_ideals(const Settings& s, std::ostream& out) {
  const FiniteRing ring = parse_ring(s.ring);
  out << render_lattice(*enumerate_ideals(ring), parse_format(s.format));
  return kExitOk;
}

int cmd_info(const Settings& s, std::ostream& out) {
  out << render_ring(parse_ring(s.ring), parse_format(s.format));
  return kExitOk;
}

/// An unquoted `{0,4}` reaches us brace-expanded by the shell as `0 4`.
std::string ideal_text(const std::vector<std::string>& tokens) {
  if (tokens.size() == 1 && tokens[0].find('{') != std::string::npos) return tokens[0];
  std::string text = "{";
  for (std::size_t i = 0; i < tokens.size(); ++i) text += (i ? "," : "") + tokens[i];
  return text + "}";
}

int cmd_classify(const Settings& s, std::ostream& out) {
  const FiniteRing ring = parse_ring(s.ring);
  const LatticePtr lattice = enumerate_ideals(ring);
  const Ideal ideal = parse_ideal(ideal_text(s.ideal), ring);
  const ExpansionFn delta = parse_delta(s.delta, ring, lattice);
  const MNParams p{s.m, s.n};
  if (p.m < 1 || p.n < 1 || p.n >= p.m) {
    throw Error(ErrorKind::bad_config, "need 1 ≤ n < m, got m=" + std::to_string(p.m) +
                                           ", n=" + std::to_string(p.n));
  }
  const ClassificationReport report = classify_full(ideal, delta, p);
  out << render_classification(report, mn_entry_name(p, s.weakly, delta.label()),
                               parse_format(s.format));
  return kExitOk;
}

int cmd_verify(const Settings& s, std::ostream& out) {
  const Format format = parse_format(s.format);
  std::vector<std::string> ids = s.theorems;
  if (ids.empty()) {
    for (const auto& t : list_theorems()) {
      if (!t.expected_false || s.include_known_false) ids.push_back(t.id);
    }
  }
  for (const auto& id : ids) {
    if (!is_registered(id)) throw Error(ErrorKind::unknown_theorem, "no theorem '" + id + "'");
  }
  const CatalogContext ctx(load_catalog(s), s.workers);
  const auto reports = verify_theorems(ids, ctx, VerifyOptions{s.workers});
  out << render_theorem_reports(header_of(ctx.catalog()), reports, format);
  for (const auto& r : reports) {
    if (!r.counterexamples.empty()) return kExitCounterexample;
    if (!r.info.expected_false && r.insufficient_hits()) return kExitCounterexample;
  }
  return kExitOk;
}

int cmd_fuzz(const Settings& s, std::ostream& out) {
  const Format format = parse_format(s.format);
  parse_conjecture(s.conjecture);  // reject bad input before building the catalog
  const CatalogContext ctx(load_catalog(s), s.workers);
  const TheoremReport report = fuzz(ctx, s.conjecture, FuzzOptions{s.seed, s.trials, s.workers});
  out << render_fuzz(header_of(ctx.catalog()), report, format);
  return report.counterexamples.empty() ? kExitOk : kExitCounterexample;
}

int cmd_theorems(const Settings& s, std::ostream& out) {
  out << render_theorem_list(list_theorems(), parse_format(s.format));
  return kExitOk;
}

void print_error(std::ostream& err, const Error& e) {
  err << "error: " << to_string(e.kind());
  if (e.position()) err << " at position " << *e.position();
  err << ": " << e.detail() << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Finite commutative ring calculator for (m,n)-closed δ-primary ideals"};
  app.name("ringlab");
  app.require_subcommand(1);

  auto* ideals = app.add_subcommand("ideals", "List the ideal lattice of a ring");
  ideals->add_option("ring", s.ring, "Ring expression")->required();
  add_format(ideals, s);

  auto* info = app.add_subcommand("info", "Show elements, characteristic and radicals");
  info->add_option("ring", s.ring, "Ring expression")->required();
  add_format(info, s);

  auto* classify = app.add_subcommand("classify", "Classify an ideal under an expansion");
  classify->add_option("ring", s.ring, "Ring expression")->required();
  classify->add_option("--ideal", s.ideal, "Generators, e.g. {0,4}")
      ->required()
      ->expected(1, -1);
  classify->add_option("--delta", s.delta, "Expansion expression")->capture_default_str();
  classify->add_option("-m", s.m, "m")->capture_default_str();
  classify->add_option("-n", s.n, "n")->capture_default_str();
  classify->add_flag("--weakly", s.weakly, "Headline the weakly variant");
  add_format(classify, s);

  auto* verify = app.add_subcommand("verify", "Verify registered theorems over a catalog");
  verify->add_option("--theorem", s.theorems, "Theorem id (repeatable); default all T-*");
  add_catalog(verify, s);
  verify->add_option("--min-hits", s.min_hits, "Hypothesis hits required per theorem (default 5)");
  verify->add_option("--absorbing-max-n", s.absorbing_max_n,
                     "Largest n for n-absorbing families (default 3)");
  verify->add_flag("--include-known-false", s.include_known_false,
                   "Also run the F-* entries when no --theorem is given");
  add_format(verify, s);

  auto* fuzzer = app.add_subcommand("fuzz", "Search for counterexamples to a conjecture");
  fuzzer->add_option("--conjecture", s.conjecture, "Formula over classifier atoms")->required();
  fuzzer->add_option("--trials", s.trials, "Sampled instances")->capture_default_str();
  add_catalog(fuzzer, s);
  add_format(fuzzer, s);

  auto* theorems = app.add_subcommand("theorems", "List the theorem registry");
  add_format(theorems, s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ideals) return cmd_ideals(s, out);
    if (*info) return cmd_info(s, out);
    if (*classify) return cmd_classify(s, out);
    if (*verify) return cmd_verify(s, out);
    if (*fuzzer) return cmd_fuzz(s, out);
    if (*theorems) return cmd_theorems(s, out);
  } catch (const Error& e) {
    print_error(err, e);
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ringlab
