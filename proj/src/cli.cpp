#include "hyp/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "hyp/textio.hpp"

namespace hyp {

namespace {

std::optional<std::string> read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot open \"" << path << "\"\n";
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void print_diagnostics(std::ostream& err, const std::string& path,
                       const std::vector<Diagnostic>& diagnostics) {
  for (const Diagnostic& d : diagnostics)
    err << path << ":" << d.line << ":" << d.column << ": " << d.message << "\n";
}

struct CheckConfig {
  std::string structure_path;
  std::string subset_path;
  std::string fuzzy_path;
};

int cmd_check(const CheckConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto text = read_file(cfg.structure_path, err);
  if (!text) return 2;
  const auto model = parse_structure(*text);
  if (!model.ok()) {
    print_diagnostics(err, cfg.structure_path, model.diagnostics);
    return 2;
  }
  const Hypergroupoid& s = model.value->groupoid;
  const Relation& r = model.value->relation;

  std::vector<ReportRecord> records;
  const RelationFlags flags = relation_diagnostics(s, r);
  records.push_back(PropertyRecord{"relation_reflexive", flags.reflexive});
  records.push_back(PropertyRecord{"relation_transitive", flags.transitive});
  records.push_back(PropertyRecord{"relation_antisymmetric", flags.antisymmetric});

  if (!cfg.subset_path.empty()) {
    const auto subset_text = read_file(cfg.subset_path, err);
    if (!subset_text) return 2;
    const auto parsed = parse_subset(*subset_text, s);
    if (!parsed.ok()) {
      print_diagnostics(err, cfg.subset_path, parsed.diagnostics);
      return 2;
    }
    const Subset a = *parsed.value;
    records.push_back(PropertyRecord{"subgroupoid", is_subgroupoid(s, a)});
    records.push_back(PropertyRecord{"left_ideal", is_ideal(s, r, a, IdealSide::Left)});
    records.push_back(PropertyRecord{"right_ideal", is_ideal(s, r, a, IdealSide::Right)});
    records.push_back(PropertyRecord{"ideal", is_ideal(s, r, a, IdealSide::TwoSided)});
    const FilterProfile profile = filter_profile(s, r, a);
    records.push_back(PropertyRecord{"filter", profile.all()});
    records.push_back(PropertyRecord{"filter_c1", profile.closure});
    records.push_back(PropertyRecord{"filter_c2", profile.divisors});
    records.push_back(PropertyRecord{"filter_c3", profile.all_or_nothing});
    records.push_back(PropertyRecord{"filter_c4", profile.upward_closure});
  }

  if (!cfg.fuzzy_path.empty()) {
    const auto fuzzy_text = read_file(cfg.fuzzy_path, err);
    if (!fuzzy_text) return 2;
    auto parsed = parse_fuzzy(*fuzzy_text, s);
    if (!parsed.ok()) {
      print_diagnostics(err, cfg.fuzzy_path, parsed.diagnostics);
      return 2;
    }
    const FuzzySubset& f = *parsed.value;
    records.push_back(PropertyRecord{"fuzzy_left_ideal", is_fuzzy_ideal(s, r, f, IdealSide::Left)});
    records.push_back(
        PropertyRecord{"fuzzy_right_ideal", is_fuzzy_ideal(s, r, f, IdealSide::Right)});
    records.push_back(PropertyRecord{"fuzzy_ideal", is_fuzzy_ideal(s, r, f, IdealSide::TwoSided)});
    records.push_back(PropertyRecord{"fuzzy_filter", is_fuzzy_filter(s, r, f)});
    records.push_back(PropertyRecord{"fuzzy_prime_subset", is_fuzzy_prime_subset(s, f)});
    records.push_back(PropertyRecord{"fuzzy_prime_ideal", is_fuzzy_prime_ideal(s, r, f)});
  }

  out << render_report(records);
  return 0;
}

struct VerifyConfig {
  std::string selector = "all";
  int order = 2;
  int grid = 2;
  std::string mode = "exhaustive";
  std::uint64_t seed = 1;
  std::uint64_t budget = 10000;
  int threads = 0;
  std::string table_range;
  std::uint32_t relation_mask = 0;
  bool has_table_range = false;
  bool has_relation_mask = false;
};

bool parse_table_range(const std::string& text, std::uint64_t& lo, std::uint64_t& hi) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) return false;
  try {
    lo = std::stoull(text.substr(0, colon));
    hi = std::stoull(text.substr(colon + 1));
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<TheoremId> ids;
  if (cfg.selector == "all") {
    ids.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
  } else {
    const auto id = theorem_from_name(cfg.selector);
    if (!id) {
      err << "error: unknown theorem \"" << cfg.selector
          << "\" (expected prop6, prop7, prop8, prop12, prop17, lemma5 or all)\n";
      return 2;
    }
    ids.push_back(*id);
  }

  const ExecPolicy policy{cfg.threads, 0};
  std::vector<ReportRecord> records;
  bool all_hold = true;
  for (TheoremId id : ids) {
    Verdict verdict;
    if (cfg.mode == "sample") {
      verdict = verify_sampled(id, cfg.order, cfg.grid, cfg.seed, cfg.budget, policy);
    } else if (cfg.has_table_range || cfg.has_relation_mask) {
      if (!cfg.has_table_range || !cfg.has_relation_mask) {
        err << "error: --table-range and --relation-mask must be given together\n";
        return 2;
      }
      std::uint64_t lo = 0;
      std::uint64_t hi = 0;
      if (!parse_table_range(cfg.table_range, lo, hi)) {
        err << "error: --table-range expects \"lo:hi\"\n";
        return 2;
      }
      verdict = verify_table_range(id, cfg.order, cfg.grid, lo, hi, cfg.relation_mask, policy);
    } else {
      verdict = verify_exhaustive(id, cfg.order, cfg.grid, policy);
    }
    all_hold = all_hold && verdict.holds;
    records.push_back(std::move(verdict));
  }
  out << render_report(records);
  return all_hold ? 0 : 1;
}

struct EnumerateConfig {
  std::string kind;
  int order = 2;
  bool list = false;
};

int cmd_enumerate(const EnumerateConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.kind == "structures") {
    out << "COUNT structures = " << table_count(cfg.order) << "\n";
    return 0;
  }
  if (cfg.kind == "relations") {
    out << "COUNT relations = " << relation_count(cfg.order) << "\n";
    return 0;
  }
  if (cfg.kind == "subsets") {
    out << "COUNT subsets = " << subset_count(cfg.order) << "\n";
    return 0;
  }
  // Census kinds sweep every (structure, relation, subset) triple.
  if (cfg.order > 2) {
    err << "error: the " << cfg.kind << " census is exhaustive and covers orders 1 and 2 only\n";
    return 2;
  }
  const std::uint64_t tables = table_count(cfg.order);
  const std::uint64_t rels = relation_count(cfg.order);
  const std::uint64_t subs = subset_count(cfg.order);
  std::uint64_t count = 0;
  for (std::uint64_t t = 0; t < tables; ++t) {
    const Hypergroupoid s = table_at(cfg.order, t);
    for (std::uint64_t m = 0; m < rels; ++m) {
      const Relation r = relation_at(cfg.order, m);
      for (std::uint64_t si = 0; si < subs; ++si) {
        const Subset a = nonempty_subset_at(cfg.order, si);
        const bool holds = cfg.kind == "ideals" ? is_ideal(s, r, a, IdealSide::TwoSided)
                                                : is_filter(s, r, a);
        if (!holds) continue;
        ++count;
        if (cfg.list) {
          out << "HOLDER table=" << t << " relation=" << m << " subset=";
          bool first = true;
          for (int i = 0; i < cfg.order; ++i) {
            if (!a.contains(i)) continue;
            if (!first) out << ",";
            out << s.label(i);
            first = false;
          }
          out << "\n";
        }
      }
    }
  }
  out << "COUNT " << cfg.kind << " = " << count << "\n";
  return 0;
}

struct SearchConfig {
  std::string relaxation;
  int max_order = 2;
  std::uint64_t budget = 10000000;
  std::uint64_t seed = 0;
  int threads = 0;
};

int cmd_search(const SearchConfig& cfg, std::ostream& out, std::ostream&) {
  const Relaxation relax = relaxation_from_name(cfg.relaxation);
  const ExecPolicy policy{cfg.threads, 0};
  const auto witness =
      search_counterexample(relax, cfg.max_order, cfg.budget, cfg.seed, policy);
  if (witness) {
    out << render_witness(*witness);
    return 0;
  }
  out << "none found\n";
  return 3;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite <=-hypergroupoid calculator and theorem checker"};
  app.name("hyp");
  app.require_subcommand(1);

  CheckConfig check_cfg;
  auto* check = app.add_subcommand("check", "evaluate the properties of one structure");
  check->add_option("structure", check_cfg.structure_path, "structure description file")
      ->required();
  check->add_option("--subset", check_cfg.subset_path, "crisp subset file");
  check->add_option("--fuzzy", check_cfg.fuzzy_path, "fuzzy subset file");

  VerifyConfig verify_cfg;
  auto* verify = app.add_subcommand("verify", "sweep a theorem over a finite domain");
  verify->add_option("--theorem", verify_cfg.selector,
                     "prop6, prop7, prop8, prop12, prop17, lemma5 or all")
      ->required();
  verify->add_option("--order", verify_cfg.order, "carrier size")->required();
  verify->add_option("--grid", verify_cfg.grid, "fuzzy grid denominator")
      ->check(CLI::PositiveNumber);
  verify->add_option("--mode", verify_cfg.mode, "exhaustive or sample")
      ->check(CLI::IsMember({"exhaustive", "sample"}));
  verify->add_option("--seed", verify_cfg.seed, "sample mode master seed");
  verify->add_option("--budget", verify_cfg.budget, "sample mode draw count");
  verify->add_option("--threads", verify_cfg.threads, "worker threads (0 = all cores)");
  auto* range_opt = verify->add_option("--table-range", verify_cfg.table_range,
                                       "lo:hi table ordinals for long exhaustive runs");
  auto* mask_opt = verify->add_option("--relation-mask", verify_cfg.relation_mask,
                                      "fixed relation for --table-range runs");

  EnumerateConfig enum_cfg;
  auto* enumerate = app.add_subcommand("enumerate", "count or list enumerated objects");
  enumerate
      ->add_option("--kind", enum_cfg.kind, "structures, relations, subsets, ideals or filters")
      ->required()
      ->check(CLI::IsMember({"structures", "relations", "subsets", "ideals", "filters"}));
  enumerate->add_option("--order", enum_cfg.order, "carrier size")->required();
  enumerate->add_flag("--list", enum_cfg.list, "print one HOLDER line per census hit");

  SearchConfig search_cfg;
  auto* search = app.add_subcommand("search", "hunt counterexamples to relaxed hypotheses");
  search->add_option("--relax", search_cfg.relaxation, "relaxation name")->required();
  search->add_option("--max-order", search_cfg.max_order, "largest carrier size to scan")
      ->required();
  search->add_option("--budget", search_cfg.budget, "tuple budget (0 = unlimited)");
  search->add_option("--seed", search_cfg.seed, "reserved; the canonical scan ignores it");
  search->add_option("--threads", search_cfg.threads, "worker threads (0 = all cores)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("hyp");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }
  verify_cfg.has_table_range = range_opt->count() > 0;
  verify_cfg.has_relation_mask = mask_opt->count() > 0;

  try {
    if (check->parsed()) return cmd_check(check_cfg, out, err);
    if (verify->parsed()) return cmd_verify(verify_cfg, out, err);
    if (enumerate->parsed()) return cmd_enumerate(enum_cfg, out, err);
    if (search->parsed()) return cmd_search(search_cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace hyp
