#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "girr/classify.hpp"
#include "girr/constructors.hpp"
#include "girr/serialization.hpp"

namespace girr {

/// A named corpus group with the classification it is expected to receive.
struct CorpusEntry {
  std::string name;
  std::function<PermGroup()> build;
  Verdict verdict = Verdict::NotSingleClass;
  std::optional<CaseTag> tag;
  std::int64_t p = 0;
  int n = 0;
  std::int64_t d = 0;
};

/// The acceptance corpus: nilpotent groups, one or more groups per case
/// a1..a7, and negative controls.  All orders are at most 216.
std::vector<CorpusEntry> default_corpus();

/// Central extensions of Frobenius groups with n = 1 (S3 x C2 and relatives)
/// whose irr_s is one Galois class but which match no listed case.
std::vector<CorpusEntry> statement_gap_probes();

struct CorpusResult {
  std::string name;
  PermGroup group;
  ClassificationReport report;
};

/// Builds, tabulates and classifies each entry.  Results keep entry order.
std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries, std::uint64_t seed, int parallelism = 1);

struct SweepOptions {
  std::vector<CaseTag> tags{CaseTag::a1, CaseTag::a2, CaseTag::a3, CaseTag::a4,
                            CaseTag::a5, CaseTag::a6, CaseTag::a7};
  std::vector<std::int64_t> primes{2, 3, 5, 7};
  std::int64_t max_field = 81;  // largest p^n
  std::int64_t max_order = 1000;
  std::uint64_t seed = kDefaultSeed;
  int parallelism = 1;
};

struct SweepRecord {
  CaseParams params;
  std::int64_t order = 0;
  /// "ok", or "PARAMS-INVALID" with the reason.  Points whose arithmetic
  /// holds but whose validation fails are still built and classified.
  std::string status;
  std::optional<std::string> reason;
  std::optional<ClassificationReport> report;
};

/// Every parameter point in the sweep space with order at most max_order.
std::vector<CaseParams> sweep_points(const SweepOptions& options);
std::vector<SweepRecord> run_sweep(const SweepOptions& options);
Json sweep_to_json(const std::vector<SweepRecord>& records);
Json params_to_json(const CaseParams& params);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
};

struct AcceptanceOptions {
  std::uint64_t seed = kDefaultSeed;
  int parallelism = 1;
  /// When nonempty, only these corpus names are used.
  std::vector<std::string> groups;
  bool include_sweep = true;
};

struct AcceptanceRun {
  std::vector<CriterionResult> criteria;
  std::vector<std::string> notes;  // informational lines, e.g. statement-gap probes
  bool all_pass() const;
};

/// Runs criteria 1..9.  Throws std::invalid_argument for unknown group names.
AcceptanceRun run_acceptance(const AcceptanceOptions& options);

/// Zsigmondy primes against the exception list, for all p^n <= limit.
/// Returns the number of (p, n) pairs checked; throws on disagreement.
std::int64_t check_zsigmondy_up_to(std::int64_t limit);

}  // namespace girr
