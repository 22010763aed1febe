#include "girr/classify.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>
#include <stdexcept>

#include "girr/number_theory.hpp"

namespace girr {

namespace {

constexpr const char* kChecklistNames[] = {
    "nonnilpotent",        "solvable",           "single_galois_class", "residue_is_sylow",   "frattini_equals_derived",
    "complement_found",    "shared_kernel_is_CxU", "frobenius_action",  "irreducible_action", "order_formula",
    "scalar_transitivity", "field_in_Qp",        "case_matched"};

FpMatrix minus_identity(const FpMatrix& m) {
  FpMatrix out = m;
  for (int i = 0; i < m.rows(); ++i) out(i, i) = mod(out(i, i) - 1, m.prime());
  return out;
}

std::int64_t field_size(std::int64_t p, int n) { return checked_pow(p, n); }

// Exact test of c^p * p <= bound without overflow.
bool power_times_at_most(std::int64_t c, std::int64_t p, std::int64_t bound) {
  std::int64_t acc = p;
  for (std::int64_t i = 0; i < p; ++i) {
    if (acc > bound) return false;
    acc *= c;
  }
  return acc <= bound;
}

int log_base(std::int64_t value, std::int64_t p) {
  int n = 0;
  while (value > 1) {
    value /= p;
    ++n;
  }
  return n;
}

struct Structure {
  const Subgroup* whole;
  const Subgroup* p_sub;
  const Subgroup* u_sub;
  const Subgroup* h_sub;
  const Subgroup* c_sub;
  std::int64_t p;
  int n;
  std::int64_t d;
};

bool normal_quaternion_sylow2(const Subgroup& q) {
  std::vector<ElementId> twos;
  for (ElementId x : q.elements()) {
    const std::int64_t o = q.group().element_order(x);
    if ((o & (o - 1)) == 0) twos.push_back(x);
  }
  if (twos.size() != 8) return false;
  const Subgroup s = closure(q.group(), twos);
  return s.order() == 8 && is_generalized_quaternion(s);
}

bool matches_a7(const Structure& s) {
  if (s.p != 2 || s.p_sub->order() != 8 || !is_generalized_quaternion(*s.p_sub)) return false;
  if (s.c_sub->is_trivial() || prime_of_p_group(*s.h_sub) != 3) return false;
  const Quotient q = quotient(s.whole->group(), *s.c_sub);
  const Subgroup top = q.group.whole();
  return q.group.order() == 24 && normal_quaternion_sylow2(top) && center(top).order() == 2 &&
         derived_subgroup(top).order() == 8;
}

std::optional<CaseTag> detect_case(const Structure& s) {
  const Subgroup& h = *s.h_sub;
  const bool u_trivial = s.u_sub->is_trivial(), c_trivial = s.c_sub->is_trivial();
  const std::int64_t p = s.p, top = field_size(p, s.n) - 1;

  if (u_trivial && c_trivial && is_cyclic(h) && h.order() * s.d == top) return CaseTag::a1;
  if (u_trivial && c_trivial && s.n == 2 && is_mersenne_prime(p) && is_nilpotent(h)) {
    const auto parts = nilpotent_sylow_decomposition(h);
    const bool ok = !parts.empty() && parts[0].first == 2 && is_generalized_quaternion(parts[0].second) &&
                    std::all_of(parts.begin() + 1, parts.end(), [](const auto& part) { return is_cyclic(part.second); });
    if (ok) return CaseTag::a2;
  }
  if (u_trivial && !c_trivial) {
    const std::int64_t q = top / (p - 1);
    if (is_prime(q) && prime_of_p_group(h) == q && h.order() / s.c_sub->order() == q) return CaseTag::a3;
  }
  if (is_extraspecial_p3(*s.p_sub, p) && c_trivial) {
    const Subgroup cu = centralizer(h, *s.u_sub);
    if (is_cyclic(h) && h.order() == 2 * (p + 1) && h.order() / cu.order() == 2) return CaseTag::a4;
    if (cu == h && is_cyclic(h) && h.order() == p + 1) return CaseTag::a5;
    if (cu == h && is_mersenne_prime(p) && is_generalized_quaternion(h) && h.order() * s.d == p * p - 1 &&
        (s.d == (p - 1) / 2 || s.d == p - 1)) {
      return CaseTag::a6;
    }
  }
  if (matches_a7(s)) return CaseTag::a7;
  return std::nullopt;
}

std::string failure_reason(const CharacterTable& t, const IrrPartition& part) {
  if (part.irr_s.empty()) return "irr_s is empty";
  const Subgroup k0 = kernel_of(t, part.irr_s[0]);
  for (std::size_t row : part.irr_s) {
    if (!(kernel_of(t, row) == k0)) return "multiple kernels in irr_s";
  }
  for (std::size_t row : part.irr_s) {
    if (t.degree(row) != t.degree(part.irr_s[0])) return "distinct degrees in irr_s";
  }
  std::size_t orbits = 0;
  for (const auto& orbit : galois_orbits(t)) {
    if (std::find(part.irr_s.begin(), part.irr_s.end(), orbit[0]) != part.irr_s.end()) ++orbits;
  }
  return "irr_s splits into " + std::to_string(orbits) + " Galois orbits";
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NilpotentEmpty: return "NilpotentEmpty";
    case Verdict::SingleGaloisClass: return "SingleGaloisClass";
    case Verdict::NotSingleClass: return "NotSingleClass";
  }
  return "?";
}

std::string to_string(CaseTag t) { return "a" + std::to_string(static_cast<int>(t) + 1); }

std::optional<CaseTag> parse_case_tag(std::string_view text) {
  if (text.size() != 2 || text[0] != 'a' || text[1] < '1' || text[1] > '7') return std::nullopt;
  return static_cast<CaseTag>(text[1] - '1');
}

std::optional<bool> ClassificationReport::check(std::string_view name) const {
  for (const auto& item : checklist) {
    if (item.name == name) return item.value;
  }
  throw std::out_of_range("unknown checklist item " + std::string(name));
}

IrrPartition irr_partition(const CharacterTable& t) {
  IrrPartition part;
  const std::int64_t order = t.group().order();
  for (std::size_t row = 0; row < t.size(); ++row) {
    const std::int64_t d = t.degree(row);
    const std::int64_t index = order / kernel_of(t, row).order();
    (index % (d * d) == 0 ? part.irr_n : part.irr_s).push_back(row);
  }
  return part;
}

bool is_single_galois_class(const CharacterTable& t, const IrrPartition& part) {
  if (part.irr_s.empty()) return false;
  std::vector<std::size_t> s = part.irr_s;
  std::sort(s.begin(), s.end());
  for (auto orbit : galois_orbits(t)) {
    std::sort(orbit.begin(), orbit.end());
    if (orbit == s) return true;
  }
  return false;
}

Subgroup find_complement(const Subgroup& g, const Subgroup& p_sub, std::uint64_t seed, std::int64_t closure_cap) {
  const PermGroup& grp = g.group();
  const std::int64_t target = g.order() / p_sub.order();
  if (target == 1) return grp.trivial();
  const auto p = prime_of_p_group(p_sub);
  if (!p) throw std::invalid_argument("find_complement: not a p-group");

  std::vector<ElementId> coprime;
  for (ElementId x : g.elements()) {
    if (x != grp.identity() && grp.element_order(x) % *p != 0) coprime.push_back(x);
  }
  std::mt19937_64 rng(seed);
  std::int64_t closures = 0;
  constexpr int kMaxPasses = 64;
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    for (std::size_t i = coprime.size(); i > 1; --i) std::swap(coprime[i - 1], coprime[rng() % i]);
    Subgroup h = grp.trivial();
    for (ElementId x : coprime) {
      if (h.contains(x)) continue;
      if (++closures > closure_cap) throw ComplementNotFound("complement search exceeded closure cap");
      std::vector<ElementId> gens = h.generators();
      gens.push_back(x);
      Subgroup candidate = closure(grp, gens);
      if (candidate.order() > target || gcd(candidate.order(), *p) != 1) continue;
      h = std::move(candidate);
      if (h.order() == target) return h;
    }
  }
  throw ComplementNotFound("no complement found");
}

bool check_frobenius_action(std::span<const FpMatrix> mats, std::int64_t p, int n) {
  const auto elems = matrix_group_elements(mats);
  if (elems.size() <= 1) return false;
  for (std::size_t i = 1; i < elems.size(); ++i) {
    if (elems[i].prime() != p || elems[i].rows() != n) throw std::invalid_argument("matrix shape mismatch");
    if (minus_identity(elems[i]).rank() != n) return false;
  }
  return true;
}

bool check_irreducible_action(std::span<const FpMatrix> mats, std::int64_t p, int n) {
  const std::int64_t q = field_size(p, n);
  for (std::int64_t idx = 1; idx < q; ++idx) {
    if (spin_dimension(vector_from_index(idx, p, n), mats) != n) return false;
  }
  return true;
}

bool check_scalar_transitivity(std::span<const FpMatrix> mats, std::int64_t p, int n) {
  std::vector<FpMatrix> gens(mats.begin(), mats.end());
  gens.push_back(FpMatrix::scalar(p, n, primitive_root(p)));
  const std::int64_t q = field_size(p, n);
  std::vector<char> seen(static_cast<std::size_t>(q), 0);
  std::deque<std::int64_t> queue{1};
  seen[1] = 1;
  std::int64_t count = 1;
  while (!queue.empty()) {
    const auto v = vector_from_index(queue.front(), p, n);
    queue.pop_front();
    for (const auto& m : gens) {
      const std::int64_t w = vector_index(m.apply(v), p);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        queue.push_back(w);
      }
    }
  }
  return count == q - 1;
}

bool is_extraspecial_p3(const Subgroup& p_sub, std::int64_t p) {
  if (p_sub.order() != p * p * p) return false;
  const Subgroup z = center(p_sub);
  return z.order() == p && derived_subgroup(p_sub) == z && frattini_of_pgroup(p_sub, p) == z;
}

bool check_isaacs_bound(const CoprimeAction& action) {
  const Subgroup& n = action.acting;
  const Subgroup& target = action.target;
  const PermGroup& g = n.group();
  if (n.is_trivial()) throw std::invalid_argument("acting group is trivial");
  if (!is_nilpotent(n)) throw std::invalid_argument("acting group is not nilpotent");
  if (gcd(n.order(), target.order()) != 1) throw std::invalid_argument("action is not coprime");
  for (ElementId x : n.generators()) {
    for (ElementId y : target.generators()) {
      if (!target.contains(g.conj(y, x))) throw std::invalid_argument("acting group does not normalize target");
    }
  }
  if (!centralizer(n, target).is_trivial()) throw std::invalid_argument("action is not faithful");

  const std::int64_t p = prime_divisors(n.order()).front();
  for (ElementId y : target.elements()) {
    std::int64_t fixers = 0;
    for (ElementId x : n.elements()) fixers += g.conj(y, x) == y ? 1 : 0;
    if (power_times_at_most(fixers, p, n.order())) return true;
  }
  return false;
}

FrobeniusCriterion check_frobenius_criterion(std::span<const FpMatrix> mats, std::int64_t p, int n) {
  const auto elems = matrix_group_elements(mats);
  if (elems.size() <= 1) throw std::invalid_argument("matrix group is trivial");
  if (!is_nilpotent(matrix_group_permutations(mats).whole())) throw std::invalid_argument("matrix group is not nilpotent");
  if (!check_irreducible_action(mats, p, n)) throw std::invalid_argument("action is reducible");

  const std::int64_t order = static_cast<std::int64_t>(elems.size());
  FrobeniusCriterion out;
  out.hypothesis = true;
  const std::int64_t q = field_size(p, n);
  for (std::int64_t idx = 0; idx < q && out.hypothesis; ++idx) {
    const auto v = vector_from_index(idx, p, n);
    std::int64_t stab = 0;
    for (const auto& m : elems) stab += m.apply(v) == v ? 1 : 0;
    out.hypothesis = stab == 1 || (stab * stab) % order == 0;
  }
  out.conclusion = check_frobenius_action(mats, p, n);
  return out;
}

ClassificationReport analyze_structure(const PermGroup& g, const CharacterTable& t, std::uint64_t seed) {
  ClassificationReport r;
  r.group_name = g.name();
  for (const char* name : kChecklistNames) r.checklist.push_back({name, std::nullopt});
  const auto set = [&](std::string_view name, bool value) {
    for (auto& item : r.checklist) {
      if (item.name == name) item.value = value;
    }
    return value;
  };

  const Subgroup whole = g.whole();
  r.witnesses.order = g.order();
  const IrrPartition part = irr_partition(t);
  r.irr_s = part.irr_s;
  for (std::size_t row : part.irr_s) r.irr_s_degrees.push_back(t.degree(row));
  for (const auto& orbit : galois_orbits(t)) {
    if (std::find(part.irr_s.begin(), part.irr_s.end(), orbit[0]) != part.irr_s.end()) ++r.galois_orbits_in_irr_s;
  }

  const bool nilpotent = is_nilpotent(whole);
  r.solvable = is_solvable(whole);
  r.fitting_height_at_most_two = r.solvable && has_fitting_height_at_most_two(whole);
  set("nonnilpotent", !nilpotent);
  set("solvable", r.solvable);
  r.single_class = set("single_galois_class", is_single_galois_class(t, part));

  if (part.irr_s.empty() != nilpotent) {
    r.theorem_violations.push_back(std::string("THEOREM-VIOLATION: irr_s is ") + (part.irr_s.empty() ? "" : "not ") +
                                   "empty but the group is " + (nilpotent ? "" : "not ") + "nilpotent");
  }
  if (nilpotent) {
    r.verdict = Verdict::NilpotentEmpty;
    return r;
  }
  r.verdict = r.single_class ? Verdict::SingleGaloisClass : Verdict::NotSingleClass;
  if (!r.single_class) r.failure_reason = failure_reason(t, part);

  // Structural path; the first failing item ends it.
  const auto structural = [&]() -> bool {
    const auto fail = [&](const char* name) {
      set(name, false);
      r.first_structural_failure = name;
      return false;
    };
    if (!r.solvable) return fail("solvable");

    const Subgroup p_sub = nilpotent_residue(whole);
    const auto p = prime_of_p_group(p_sub);
    r.witnesses.order_p = p_sub.order();
    if (!p || gcd(g.order() / p_sub.order(), *p) != 1) return fail("residue_is_sylow");
    set("residue_is_sylow", true);
    r.witnesses.p = *p;

    const Subgroup u_sub = frattini_of_pgroup(p_sub, *p);
    r.witnesses.order_u = u_sub.order();
    if (!(u_sub == derived_subgroup(p_sub))) return fail("frattini_equals_derived");
    set("frattini_equals_derived", true);
    const int n = log_base(p_sub.order() / u_sub.order(), *p);
    r.witnesses.n = n;

    Subgroup h_sub;
    try {
      h_sub = find_complement(whole, p_sub, seed);
    } catch (const ComplementNotFound&) {
      return fail("complement_found");
    }
    set("complement_found", true);
    const Subgroup c_sub = centralizer(h_sub, p_sub);
    r.witnesses.order_h = h_sub.order();
    r.witnesses.order_c = c_sub.order();

    const std::int64_t d = static_cast<std::int64_t>(part.irr_s.size());
    r.witnesses.d = d;
    if (part.irr_s.empty()) return fail("shared_kernel_is_CxU");
    const Subgroup k_sub = kernel_of(t, part.irr_s[0]);
    r.witnesses.order_k = k_sub.order();
    bool shared = std::all_of(part.irr_s.begin(), part.irr_s.end(),
                              [&](std::size_t row) { return kernel_of(t, row) == k_sub; });
    shared = shared && k_sub == join(c_sub, u_sub) && intersection(c_sub, u_sub).is_trivial() &&
             commutator_subgroup(c_sub, u_sub, whole).is_trivial();
    if (!shared) return fail("shared_kernel_is_CxU");
    set("shared_kernel_is_CxU", true);

    const ModuleAction action = quotient_module_action(p_sub, u_sub, h_sub.generators());
    if (!check_frobenius_action(action.matrices, *p, n)) return fail("frobenius_action");
    set("frobenius_action", true);
    if (!check_irreducible_action(action.matrices, *p, n)) return fail("irreducible_action");
    set("irreducible_action", true);
    const std::int64_t top = field_size(*p, n) - 1;
    if ((*p - 1) % d != 0 || (h_sub.order() / c_sub.order()) * d != top) return fail("order_formula");
    set("order_formula", true);
    if (!check_scalar_transitivity(action.matrices, *p, n)) return fail("scalar_transitivity");
    set("scalar_transitivity", true);
    for (std::size_t row : part.irr_s) {
      if (!field_in_pth_cyclotomic(t, row, *p)) return fail("field_in_Qp");
    }
    set("field_in_Qp", true);

    r.case_tag = detect_case({&whole, &p_sub, &u_sub, &h_sub, &c_sub, *p, n, d});
    if (!r.case_tag) return fail("case_matched");
    set("case_matched", true);
    return true;
  };
  r.structural_match = structural();

  if (r.single_class != r.structural_match) {
    std::ostringstream msg;
    msg << "THEOREM-VIOLATION: irr_s is " << (r.single_class ? "" : "not ") << "a single Galois class but the structural "
        << "checklist " << (r.structural_match ? "holds" : "fails at " + r.first_structural_failure.value_or("?"));
    r.theorem_violations.push_back(msg.str());
  }
  if (r.single_class && !r.fitting_height_at_most_two) {
    r.theorem_violations.push_back("THEOREM-VIOLATION: single Galois class but Fitting height exceeds two");
  }
  return r;
}

}  // namespace girr
