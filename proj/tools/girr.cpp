// girr: character tables, classification and the acceptance harness.

#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "girr/acceptance.hpp"
#include "girr/cyclotomic.hpp"
#include "girr/number_theory.hpp"

namespace {

using namespace girr;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

struct Globals {
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::int64_t> max_order;
  std::string format = "json";
  std::int64_t conductor_bound = 10'000;
  int parallelism = 1;

  RunConfig config(std::int64_t default_order) const {
    return {seed, max_order.value_or(default_order), conductor_bound, format, parallelism};
  }
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_zsigmondy(std::int64_t p, int n) {
  const auto q = zsigmondy_prime(p, n);
  std::cout << (q ? std::to_string(*q) : "none") << '\n';
  return kOk;
}

int cmd_chartab(const Globals& g, const std::string& file) {
  const RunConfig config = g.config(kDefaultOrderBound);
  const PermGroup group = read_group_file(file, config.order_bound);
  const auto t = character_table(group, config.seed);
  if (config.format == "text") {
    std::cout << "# seed " << config.seed << '\n' << table_to_text(t);
  } else {
    Json doc = table_to_json(t);
    doc["config"] = to_json(config);
    std::cout << dump(doc);
  }
  return kOk;
}

int cmd_classify(const Globals& g, const std::string& file, bool expect_single) {
  const RunConfig config = g.config(kDefaultOrderBound);
  const PermGroup group = read_group_file(file, config.order_bound);
  const auto t = character_table(group, config.seed);
  const auto report = analyze_structure(group, t, config.seed);
  if (config.format == "text") {
    std::cout << "# seed " << config.seed << '\n' << report_to_text(report);
  } else {
    Json doc = report_to_json(report);
    doc["config"] = to_json(config);
    std::cout << dump(doc);
  }
  if (!report.theorem_violations.empty()) return kError;
  return expect_single && report.verdict != Verdict::SingleGaloisClass ? kNegative : kOk;
}

int cmd_construct(const CaseParams& params, const std::string& out) {
  try {
    const PermGroup group = construct_case(params);
    write_text_file(out, serialize_group(group));
    std::cerr << describe(params) << ": order " << group.order() << " written to " << out << '\n';
    return kOk;
  } catch (const ParamsInvalid& e) {
    std::cerr << e.what() << '\n';
    return kNegative;
  }
}

int cmd_sweep(const Globals& g, const std::string& tags, const std::string& out) {
  const RunConfig config = g.config(1000);
  SweepOptions options;
  options.tags.clear();
  for (const auto& tag : split_commas(tags)) {
    const auto parsed = parse_case_tag(tag);
    if (!parsed) throw CLI::ValidationError("--tags", "unknown case tag " + tag);
    options.tags.push_back(*parsed);
  }
  options.max_order = config.order_bound;
  options.seed = config.seed;
  options.parallelism = config.parallelism;
  const auto records = run_sweep(options);
  const Json doc{{"config", to_json(config)}, {"records", sweep_to_json(records)}};
  write_text_file(out, dump(doc));
  std::size_t ok = 0, violations = 0;
  for (const auto& r : records) {
    ok += r.status == "ok" ? 1 : 0;
    if (r.report) violations += r.report->theorem_violations.size();
  }
  std::cerr << records.size() << " parameter points, " << ok << " constructed, " << records.size() - ok
            << " PARAMS-INVALID, " << violations << " theorem violations\n";
  return violations == 0 ? kOk : kError;
}

int cmd_check_theorem(const Globals& g, const std::optional<std::string>& groups, bool no_sweep) {
  AcceptanceOptions options;
  options.seed = g.seed;
  options.parallelism = g.parallelism;
  options.include_sweep = !no_sweep;
  if (groups) {
    options.groups = split_commas(*groups);
    if (options.groups.empty()) throw CLI::ValidationError("--groups", "empty corpus");
  }
  const auto run = run_acceptance(options);
  for (const auto& c : run.criteria) {
    std::cout << "criterion " << c.id << ": " << (c.pass ? "PASS" : "FAIL") << "  " << c.title << " [" << c.detail
              << "]\n";
  }
  for (const auto& note : run.notes) std::cout << "note: " << note << '\n';
  return run.all_pass() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"girr: exact character tables and Galois-class classification of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--max-order", g.max_order, "group order bound (sweep: largest order)");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--conductor-bound", g.conductor_bound, "largest cyclotomic conductor")->capture_default_str();
  app.add_option("-j,--parallelism", g.parallelism, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  std::int64_t zp = 0;
  int zn = 0;
  auto* zsig = app.add_subcommand("zsigmondy", "print a primitive prime divisor of p^n - 1, or none");
  zsig->add_option("p", zp)->required();
  zsig->add_option("n", zn)->required()->check(CLI::PositiveNumber);

  std::string table_file;
  auto* chartab = app.add_subcommand("chartab", "character table of a GroupFile");
  chartab->add_option("groupfile", table_file)->required()->check(CLI::ExistingFile);

  std::string classify_file;
  bool expect_single = false;
  auto* classify = app.add_subcommand("classify", "classification report of a GroupFile");
  classify->add_option("groupfile", classify_file)->required()->check(CLI::ExistingFile);
  classify->add_option("--report", g.format, "report format")->check(CLI::IsMember({"json", "text"}));
  classify->add_flag("--expect-single", expect_single, "exit 1 unless irr_s is a single Galois class");

  std::string tag_text, construct_out;
  CaseParams params;
  std::optional<std::int64_t> d_opt;
  auto* construct = app.add_subcommand("construct", "build a case group and write a GroupFile");
  construct->add_option("tag", tag_text)->required()->check(CLI::IsMember({"a1", "a2", "a3", "a4", "a5", "a6", "a7"}));
  construct->add_option("--p", params.p)->required();
  construct->add_option("--n", params.n)->required()->check(CLI::PositiveNumber);
  construct->add_option("--d", d_opt, "defaults to the value the case forces, else 1");
  construct->add_option("--height", params.height)->check(CLI::PositiveNumber);
  construct->add_option("--out", construct_out)->required();

  std::string sweep_tags = "a1,a2,a3,a4,a5,a6,a7", sweep_out;
  auto* sweep = app.add_subcommand("sweep", "construct and classify every parameter point");
  sweep->add_option("--tags", sweep_tags)->capture_default_str();
  sweep->add_option("--out", sweep_out)->required();

  std::optional<std::string> groups;
  bool no_sweep = false;
  auto* check = app.add_subcommand("check-theorem", "run the acceptance criteria");
  check->add_option("--groups", groups, "comma-separated corpus names");
  check->add_flag("--no-sweep", no_sweep, "skip the parameter sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    set_conductor_bound(g.conductor_bound);
    if (*zsig) return cmd_zsigmondy(zp, zn);
    if (*chartab) return cmd_chartab(g, table_file);
    if (*classify) return cmd_classify(g, classify_file, expect_single);
    if (*construct) {
      params.tag = *parse_case_tag(tag_text);
      if (d_opt) {
        params.d = *d_opt;
      } else if (params.tag == CaseTag::a3 || params.tag == CaseTag::a5) {
        params.d = params.p - 1;
      } else if (params.tag == CaseTag::a4) {
        params.d = std::max<std::int64_t>(1, (params.p - 1) / 2);
      }
      return cmd_construct(params, construct_out);
    }
    if (*sweep) return cmd_sweep(g, sweep_tags, sweep_out);
    if (*check) return cmd_check_theorem(g, groups, no_sweep);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
