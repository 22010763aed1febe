#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "girr/char_table.hpp"
#include "girr/linear_fp.hpp"
#include "girr/perm_group.hpp"

namespace girr {

enum class Verdict { NilpotentEmpty, SingleGaloisClass, NotSingleClass };
enum class CaseTag { a1, a2, a3, a4, a5, a6, a7 };

std::string to_string(Verdict v);
std::string to_string(CaseTag t);
std::optional<CaseTag> parse_case_tag(std::string_view text);

struct IrrPartition {
  std::vector<std::size_t> irr_n;
  std::vector<std::size_t> irr_s;
};

/// chi is in irr_n iff chi(1)^2 divides |G : ker chi|.
IrrPartition irr_partition(const CharacterTable& t);

/// irr_s is nonempty and is exactly one Galois orbit.
bool is_single_galois_class(const CharacterTable& t, const IrrPartition& part);

class ComplementNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kComplementClosureCap = 100'000;

/// A complement to the normal Sylow subgroup `p_sub` of `g`, by seeded
/// randomized growth of p'-subgroups.
Subgroup find_complement(const Subgroup& g, const Subgroup& p_sub, std::uint64_t seed = kDefaultSeed,
                         std::int64_t closure_cap = kComplementClosureCap);

/// Every nonidentity element of the (nontrivial) generated group fixes only 0.
bool check_frobenius_action(std::span<const FpMatrix> mats, std::int64_t p, int n);
/// Every nonzero vector spins up to the whole space.
bool check_irreducible_action(std::span<const FpMatrix> mats, std::int64_t p, int n);
/// The group generated by `mats` and the scalars is transitive on nonzero vectors.
bool check_scalar_transitivity(std::span<const FpMatrix> mats, std::int64_t p, int n);

/// |P| = p^3 and Z(P) = P' = Phi(P) has order p.
bool is_extraspecial_p3(const Subgroup& p_sub, std::int64_t p);

/// Conjugation action of a subgroup `acting` on a subgroup `target` it
/// normalizes, both inside one group.
struct CoprimeAction {
  Subgroup acting;
  Subgroup target;
};

/// Some g in the target has |C_N(g)|^p <= |N| / p, p the least prime of |N|.
/// Throws std::invalid_argument when N is not nilpotent, not faithful, or
/// not coprime to the target.
bool check_isaacs_bound(const CoprimeAction& action);

struct FrobeniusCriterion {
  bool hypothesis = false;  // C_H(v) = 1 or |H| divides |C_H(v)|^2 for every v
  bool conclusion = false;  // V x| H is Frobenius with complement H
};

/// Evaluates the hypothesis and conclusion of the Frobenius criterion for a
/// nontrivial nilpotent matrix group acting irreducibly.  Throws
/// std::invalid_argument when those preconditions fail.
FrobeniusCriterion check_frobenius_criterion(std::span<const FpMatrix> mats, std::int64_t p, int n);

struct Witnesses {
  std::int64_t p = 0;
  int n = 0;
  std::int64_t d = 0;
  std::int64_t order = 0;
  std::int64_t order_p = 0;  // |P|
  std::int64_t order_u = 0;  // |U|
  std::int64_t order_k = 0;  // |K|, the shared kernel of irr_s
  std::int64_t order_h = 0;  // |H|
  std::int64_t order_c = 0;  // |C_H(P)|
};

struct ChecklistItem {
  std::string name;
  std::optional<bool> value;  // nullopt when not evaluated
};

struct ClassificationReport {
  std::string group_name;
  Verdict verdict = Verdict::NotSingleClass;
  std::optional<CaseTag> case_tag;
  Witnesses witnesses;
  std::vector<ChecklistItem> checklist;
  std::vector<std::size_t> irr_s;
  std::vector<std::int64_t> irr_s_degrees;
  std::size_t galois_orbits_in_irr_s = 0;
  std::optional<std::string> failure_reason;
  std::optional<std::string> first_structural_failure;
  std::vector<std::string> theorem_violations;
  bool fitting_height_at_most_two = false;
  bool solvable = false;
  /// Character-theoretic and structural verdicts, kept separately.
  bool single_class = false;
  bool structural_match = false;

  std::optional<bool> check(std::string_view name) const;
};

/// Runs the full checklist.  The character-theoretic test and the structural
/// conditions are evaluated independently; disagreements are recorded as
/// theorem violations.
ClassificationReport analyze_structure(const PermGroup& g, const CharacterTable& t, std::uint64_t seed = kDefaultSeed);

}  // namespace girr
