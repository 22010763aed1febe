#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "girr/linear_fp.hpp"
#include "girr/permutation.hpp"

namespace girr {

inline constexpr std::int64_t kDefaultOrderBound = 500'000;

using ElementId = std::uint32_t;

class Subgroup;

/// A finite permutation group with every element enumerated.
///
/// Subgroups keep a pointer to their group, so a PermGroup must stay in
/// place once subgroups of it exist.
///
/// Elements are numbered in breadth-first order from the identity (index 0),
/// multiplying on the right by generators.  The group is immutable after
/// construction and may be shared read-only across threads.
class PermGroup {
 public:
  PermGroup() = default;

  std::size_t degree() const { return degree_; }
  std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<ElementId>& generator_ids() const { return generator_ids_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const Permutation& element(ElementId i) const { return elements_[i]; }
  std::optional<ElementId> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

  ElementId identity() const { return 0; }
  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId a) const { return inverses_[a]; }
  ElementId pow(ElementId a, std::int64_t k) const;
  /// b^-1 a b
  ElementId conj(ElementId a, ElementId b) const { return mul(mul(inv(b), a), b); }
  /// a^-1 b^-1 a b
  ElementId comm(ElementId a, ElementId b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  std::int64_t element_order(ElementId a) const { return orders_[a]; }
  std::int64_t exponent() const { return exponent_; }

  Subgroup whole() const;
  Subgroup trivial() const;

  /// Breadth-first spanning tree: element = parent * generator[gen].
  ElementId bfs_parent(ElementId a) const { return parent_[a]; }
  std::size_t bfs_generator(ElementId a) const { return parent_gen_[a]; }

  friend PermGroup group_from_generators(std::size_t degree, const std::vector<Permutation>& gens,
                                         std::int64_t order_bound);

 private:
  std::size_t degree_ = 0;
  std::string name_;
  std::vector<Permutation> generators_;
  std::vector<ElementId> generator_ids_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> inverses_;
  std::vector<std::int64_t> orders_;
  std::vector<ElementId> parent_;
  std::vector<std::size_t> parent_gen_;
  std::vector<std::vector<ElementId>> right_;  // right_[s][a] = a * generator s
  std::vector<ElementId> table_;  // full multiplication table for small groups
  std::int64_t exponent_ = 1;
};

PermGroup group_from_generators(std::size_t degree, const std::vector<Permutation>& gens,
                                std::int64_t order_bound = kDefaultOrderBound);

/// A subgroup of a PermGroup, stored as its sorted element set.  Equality is
/// element-set equality.
class Subgroup {
 public:
  Subgroup() = default;

  const PermGroup& group() const { return *group_; }
  std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }
  const std::vector<ElementId>& elements() const { return elements_; }
  const std::vector<ElementId>& generators() const { return generators_; }
  bool contains(ElementId x) const { return mask_[x] != 0; }
  bool is_trivial() const { return elements_.size() == 1; }
  bool is_subgroup_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }

  friend Subgroup closure(const PermGroup& g, std::span<const ElementId> gens);
  friend Subgroup subgroup_from_elements(const PermGroup& g, std::vector<ElementId> elements);

 private:
  const PermGroup* group_ = nullptr;
  std::vector<ElementId> elements_;
  std::vector<ElementId> generators_;
  std::vector<char> mask_;
};

/// Subgroup generated by `gens` (identity for an empty list).
Subgroup closure(const PermGroup& g, std::span<const ElementId> gens);
/// Wraps a set already known to be a subgroup; generators are chosen greedily.
Subgroup subgroup_from_elements(const PermGroup& g, std::vector<ElementId> elements);

Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// Smallest subgroup of `within` containing `gens` and normalized by `within`.
Subgroup normal_closure(const Subgroup& within, std::span<const ElementId> gens);
/// [A, B] for subgroups normalized by `within`.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b, const Subgroup& within);
bool is_normal(const Subgroup& n, const Subgroup& within);

Subgroup derived_subgroup(const Subgroup& s);
std::vector<Subgroup> lower_central_series(const Subgroup& s);
std::vector<Subgroup> derived_series(const Subgroup& s);
/// Stable term of the lower central series.
Subgroup nilpotent_residue(const Subgroup& s);
bool is_nilpotent(const Subgroup& s);
bool is_solvable(const Subgroup& s);
bool is_abelian(const Subgroup& s);
/// For solvable groups: the nilpotent residue is itself nilpotent.
bool has_fitting_height_at_most_two(const Subgroup& s);

Subgroup center(const Subgroup& s);
/// Elements of `s` commuting with every element of `t`.
Subgroup centralizer(const Subgroup& s, const Subgroup& t);

/// Prime p when |s| is a power of p; nullopt for the trivial group or mixed orders.
std::optional<std::int64_t> prime_of_p_group(const Subgroup& s);
Subgroup frattini_of_pgroup(const Subgroup& p_group, std::int64_t p);

bool is_cyclic(const Subgroup& s);
bool is_generalized_quaternion(const Subgroup& s);
/// Sylow subgroups of a nilpotent group, by increasing prime.
std::vector<std::pair<std::int64_t, Subgroup>> nilpotent_sylow_decomposition(const Subgroup& s);

/// Conjugacy-class data of one class.
struct ConjugacyClassData {
  ElementId representative = 0;
  std::int64_t size = 0;
  std::int64_t element_order = 1;
  /// power_map[k] = class index of representative^k for k in [0, exponent).
  std::vector<std::size_t> power_map;
  std::vector<ElementId> members;
};

struct ClassStructure {
  std::vector<ConjugacyClassData> classes;
  std::vector<std::size_t> class_of;  // element -> class index
  std::int64_t exponent = 1;

  std::size_t inverse_class(std::size_t c) const {
    return classes[c].power_map[static_cast<std::size_t>(exponent - 1)];
  }
};

/// Classes ordered by (element order, class size, lexicographically least member).
/// The least member is the representative.
ClassStructure conjugacy_classes(const PermGroup& g);

/// G/N realized as the action of G on right cosets of N.
struct Quotient {
  PermGroup group;
  std::vector<ElementId> image;  // element of G -> element of G/N
};
Quotient quotient(const PermGroup& g, const Subgroup& n);

/// Image of a subgroup of G under the quotient map.
Subgroup image_in_quotient(const Quotient& q, const Subgroup& s);

/// Matrices of the conjugation action of `acting` on the section P/U.
struct ModuleAction {
  std::int64_t p = 2;
  int n = 0;
  std::vector<ElementId> basis;  // representatives of the chosen basis of P/U
  std::vector<FpMatrix> matrices;
};
ModuleAction quotient_module_action(const Subgroup& p_sub, const Subgroup& u_sub,
                                    std::span<const ElementId> acting);

/// The matrix group generated by `mats` acting on the p^n vectors of F_p^n.
PermGroup matrix_group_permutations(std::span<const FpMatrix> mats, std::int64_t order_bound = kDefaultOrderBound);
Permutation permutation_of_matrix(const FpMatrix& m);

}  // namespace girr
