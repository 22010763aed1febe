#include "girr/perm_group.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "girr/number_theory.hpp"

namespace girr {

namespace {

constexpr std::int64_t kTableLimit = 2048;

}  // namespace

PermGroup group_from_generators(std::size_t degree, const std::vector<Permutation>& gens, std::int64_t order_bound) {
  PermGroup g;
  g.degree_ = degree;
  const Permutation one = Permutation::identity(degree);
  for (const auto& s : gens) {
    if (s.degree() != degree) throw std::invalid_argument("group_from_generators: generator degree mismatch");
    if (s.is_identity()) continue;
    if (std::find(g.generators_.begin(), g.generators_.end(), s) != g.generators_.end()) continue;
    g.generators_.push_back(s);
  }
  const std::size_t ngens = g.generators_.size();
  g.elements_.push_back(one);
  g.index_.emplace(one, 0);
  g.parent_.push_back(0);
  g.parent_gen_.push_back(0);
  g.right_.assign(ngens, {});
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    for (std::size_t s = 0; s < ngens; ++s) {
      Permutation next = g.elements_[i] * g.generators_[s];
      auto [it, inserted] = g.index_.emplace(next, static_cast<ElementId>(g.elements_.size()));
      if (inserted) {
        if (static_cast<std::int64_t>(g.elements_.size()) >= order_bound) {
          throw BoundExceeded("group order exceeds bound " + std::to_string(order_bound));
        }
        g.elements_.push_back(std::move(next));
        g.parent_.push_back(static_cast<ElementId>(i));
        g.parent_gen_.push_back(s);
      }
      g.right_[s].push_back(it->second);
    }
  }
  const std::size_t n = g.elements_.size();
  for (const auto& s : g.generators_) g.generator_ids_.push_back(g.index_.at(s));
  g.inverses_.resize(n);
  g.orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.inverses_[i] = g.index_.at(g.elements_[i].inverse());
    g.orders_[i] = g.elements_[i].order();
    g.exponent_ = lcm(g.exponent_, g.orders_[i]);
  }
  if (static_cast<std::int64_t>(n) <= kTableLimit) {
    // Column b of the table is column parent(b) pushed through one generator.
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) g.table_[a * n] = static_cast<ElementId>(a);
    for (std::size_t b = 1; b < n; ++b) {
      const auto& r = g.right_[g.parent_gen_[b]];
      const std::size_t pb = g.parent_[b];
      for (std::size_t a = 0; a < n; ++a) g.table_[a * n + b] = r[g.table_[a * n + pb]];
    }
  }
  return g;
}

std::optional<ElementId> PermGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId PermGroup::mul(ElementId a, ElementId b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  std::size_t word[64];
  std::vector<std::size_t> long_word;
  std::size_t len = 0;
  for (ElementId x = b; x != 0; x = parent_[x]) {
    if (len < 64) {
      word[len++] = parent_gen_[x];
    } else {
      if (long_word.empty()) long_word.assign(word, word + 64);
      long_word.push_back(parent_gen_[x]);
    }
  }
  if (!long_word.empty()) {
    for (std::size_t i = long_word.size(); i-- > 0;) a = right_[long_word[i]][a];
    return a;
  }
  for (std::size_t i = len; i-- > 0;) a = right_[word[i]][a];
  return a;
}

ElementId PermGroup::pow(ElementId a, std::int64_t k) const {
  if (k < 0) return pow(inv(a), -k);
  k %= orders_[a];
  ElementId result = 0, base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Subgroup PermGroup::whole() const { return closure(*this, generator_ids_); }

Subgroup PermGroup::trivial() const { return closure(*this, {}); }

Subgroup closure(const PermGroup& g, std::span<const ElementId> gens) {
  Subgroup h;
  h.group_ = &g;
  h.mask_.assign(static_cast<std::size_t>(g.order()), 0);
  h.mask_[0] = 1;
  std::vector<ElementId> elems{0};
  for (ElementId s : gens) {
    if (h.mask_[s]) continue;
    h.generators_.push_back(s);
    std::vector<ElementId> queue = elems;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (ElementId t : h.generators_) {
        const ElementId next = g.mul(queue[i], t);
        if (!h.mask_[next]) {
          h.mask_[next] = 1;
          elems.push_back(next);
          queue.push_back(next);
        }
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  h.elements_ = std::move(elems);
  return h;
}

Subgroup subgroup_from_elements(const PermGroup& g, std::vector<ElementId> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<ElementId> gens;
  Subgroup h = closure(g, {});
  for (ElementId x : elements) {
    if (h.contains(x)) continue;
    gens.push_back(x);
    h = closure(g, gens);
    if (h.order() == static_cast<std::int64_t>(elements.size())) break;
  }
  if (h.elements_ != elements) throw std::logic_error("subgroup_from_elements: set is not a subgroup");
  return h;
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](ElementId x) { return other.contains(x); });
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<ElementId> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return closure(a.group(), gens);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<ElementId> common;
  for (ElementId x : a.elements()) {
    if (b.contains(x)) common.push_back(x);
  }
  return subgroup_from_elements(a.group(), std::move(common));
}

Subgroup normal_closure(const Subgroup& within, std::span<const ElementId> gens) {
  const PermGroup& g = within.group();
  std::vector<ElementId> current(gens.begin(), gens.end());
  Subgroup h = closure(g, current);
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<ElementId> hg = h.generators();
    for (ElementId x : hg) {
      for (ElementId w : within.generators()) {
        const ElementId c = g.conj(x, w);
        if (!h.contains(c)) {
          current.push_back(c);
          h = closure(g, current);
          changed = true;
        }
      }
    }
  }
  return h;
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b, const Subgroup& within) {
  const PermGroup& g = a.group();
  std::vector<ElementId> comms;
  for (ElementId x : a.generators()) {
    for (ElementId y : b.generators()) {
      const ElementId c = g.comm(x, y);
      if (c != 0) comms.push_back(c);
    }
  }
  return normal_closure(within, comms);
}

bool is_normal(const Subgroup& n, const Subgroup& within) {
  const PermGroup& g = n.group();
  for (ElementId x : n.generators()) {
    for (ElementId w : within.generators()) {
      if (!n.contains(g.conj(x, w))) return false;
    }
  }
  return true;
}

Subgroup derived_subgroup(const Subgroup& s) { return commutator_subgroup(s, s, s); }

std::vector<Subgroup> lower_central_series(const Subgroup& s) {
  std::vector<Subgroup> series{s};
  while (true) {
    Subgroup next = commutator_subgroup(series.back(), s, s);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> derived_series(const Subgroup& s) {
  std::vector<Subgroup> series{s};
  while (true) {
    Subgroup next = derived_subgroup(series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

Subgroup nilpotent_residue(const Subgroup& s) { return lower_central_series(s).back(); }

bool is_nilpotent(const Subgroup& s) { return nilpotent_residue(s).is_trivial(); }

bool is_solvable(const Subgroup& s) { return derived_series(s).back().is_trivial(); }

bool is_abelian(const Subgroup& s) {
  const PermGroup& g = s.group();
  for (ElementId x : s.generators()) {
    for (ElementId y : s.generators()) {
      if (g.mul(x, y) != g.mul(y, x)) return false;
    }
  }
  return true;
}

bool has_fitting_height_at_most_two(const Subgroup& s) {
  return is_solvable(s) && is_nilpotent(nilpotent_residue(s));
}

Subgroup center(const Subgroup& s) { return centralizer(s, s); }

Subgroup centralizer(const Subgroup& s, const Subgroup& t) {
  const PermGroup& g = s.group();
  std::vector<ElementId> keep;
  for (ElementId x : s.elements()) {
    bool ok = true;
    for (ElementId y : t.generators()) {
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    }
    if (ok) keep.push_back(x);
  }
  return subgroup_from_elements(g, std::move(keep));
}

std::optional<std::int64_t> prime_of_p_group(const Subgroup& s) {
  if (s.order() == 1) return std::nullopt;
  const auto primes = prime_divisors(s.order());
  if (primes.size() != 1) return std::nullopt;
  return primes[0];
}

Subgroup frattini_of_pgroup(const Subgroup& p_group, std::int64_t p) {
  if (p_group.is_trivial()) return p_group;
  if (prime_of_p_group(p_group) != p) throw std::invalid_argument("frattini_of_pgroup: not a p-group");
  const PermGroup& g = p_group.group();
  std::vector<ElementId> gens;
  const auto& pg = p_group.generators();
  for (std::size_t i = 0; i < pg.size(); ++i) {
    gens.push_back(g.pow(pg[i], p));
    for (std::size_t j = i + 1; j < pg.size(); ++j) gens.push_back(g.comm(pg[i], pg[j]));
  }
  std::erase(gens, ElementId{0});
  return normal_closure(p_group, gens);
}

bool is_cyclic(const Subgroup& s) {
  const PermGroup& g = s.group();
  return std::any_of(s.elements().begin(), s.elements().end(),
                     [&](ElementId x) { return g.element_order(x) == s.order(); });
}

bool is_generalized_quaternion(const Subgroup& s) {
  const std::int64_t n = s.order();
  if (n < 8 || (n & (n - 1)) != 0) return false;
  // A 2-group with a unique involution that is not cyclic.
  const PermGroup& g = s.group();
  int involutions = 0;
  for (ElementId x : s.elements()) {
    if (g.element_order(x) == 2) ++involutions;
  }
  return involutions == 1 && !is_cyclic(s);
}

std::vector<std::pair<std::int64_t, Subgroup>> nilpotent_sylow_decomposition(const Subgroup& s) {
  if (!is_nilpotent(s)) throw std::invalid_argument("nilpotent_sylow_decomposition: group is not nilpotent");
  const PermGroup& g = s.group();
  std::vector<std::pair<std::int64_t, Subgroup>> out;
  for (std::int64_t q : prime_divisors(s.order())) {
    std::vector<ElementId> part;
    for (ElementId x : s.elements()) {
      if (prime_divisors(g.element_order(x)) == std::vector<std::int64_t>{q} || x == 0) part.push_back(x);
    }
    out.emplace_back(q, subgroup_from_elements(g, std::move(part)));
  }
  return out;
}

ClassStructure conjugacy_classes(const PermGroup& g) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> raw(n, kUnset);
  std::vector<std::vector<ElementId>> members;
  for (ElementId x = 0; x < n; ++x) {
    if (raw[x] != kUnset) continue;
    const std::size_t id = members.size();
    std::vector<ElementId> orbit{x};
    raw[x] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (ElementId s : g.generator_ids()) {
        const ElementId y = g.conj(orbit[i], s);
        if (raw[y] == kUnset) {
          raw[y] = id;
          orbit.push_back(y);
        }
      }
    }
    members.push_back(std::move(orbit));
  }
  std::vector<ElementId> least(members.size());
  for (std::size_t c = 0; c < members.size(); ++c) {
    least[c] = *std::min_element(members[c].begin(), members[c].end(), [&](ElementId a, ElementId b) {
      return g.element(a) < g.element(b);
    });
  }
  std::vector<std::size_t> perm(members.size());
  for (std::size_t c = 0; c < perm.size(); ++c) perm[c] = c;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto ka = std::make_pair(g.element_order(least[a]), members[a].size());
    const auto kb = std::make_pair(g.element_order(least[b]), members[b].size());
    if (ka != kb) return ka < kb;
    return g.element(least[a]) < g.element(least[b]);
  });
  std::vector<std::size_t> new_id(members.size());
  for (std::size_t i = 0; i < perm.size(); ++i) new_id[perm[i]] = i;

  ClassStructure cs;
  cs.exponent = g.exponent();
  cs.class_of.resize(n);
  for (std::size_t x = 0; x < n; ++x) cs.class_of[x] = new_id[raw[x]];
  cs.classes.resize(members.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    auto& c = cs.classes[i];
    c.members = std::move(members[perm[i]]);
    std::sort(c.members.begin(), c.members.end());
    c.representative = least[perm[i]];
    c.size = static_cast<std::int64_t>(c.members.size());
    c.element_order = g.element_order(c.representative);
    c.power_map.resize(static_cast<std::size_t>(cs.exponent));
    ElementId x = 0;
    for (std::int64_t k = 0; k < cs.exponent; ++k) {
      c.power_map[static_cast<std::size_t>(k)] = cs.class_of[x];
      x = g.mul(x, c.representative);
    }
  }
  return cs;
}

Quotient quotient(const PermGroup& g, const Subgroup& n) {
  if (!is_normal(n, g.whole())) throw std::invalid_argument("quotient: subgroup is not normal");
  const std::size_t order = static_cast<std::size_t>(g.order());
  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> coset(order, kUnset);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < order; ++x) {
    if (coset[x] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (ElementId m : n.elements()) coset[g.mul(m, x)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Permutation> gens;
  for (ElementId s : g.generator_ids()) {
    std::vector<std::uint32_t> images(m);
    for (std::size_t c = 0; c < m; ++c) images[c] = coset[g.mul(reps[c], s)];
    gens.emplace_back(std::move(images));
  }
  Quotient q;
  q.group = group_from_generators(m, gens, static_cast<std::int64_t>(m) + 1);
  std::vector<ElementId> gen_image(g.generator_ids().size());
  for (std::size_t s = 0; s < gens.size(); ++s) gen_image[s] = *q.group.index_of(gens[s]);
  q.image.resize(order);
  q.image[0] = 0;
  for (ElementId x = 1; x < order; ++x) {
    q.image[x] = q.group.mul(q.image[g.bfs_parent(x)], gen_image[g.bfs_generator(x)]);
  }
  return q;
}

Subgroup image_in_quotient(const Quotient& q, const Subgroup& s) {
  std::vector<ElementId> gens;
  for (ElementId x : s.generators()) gens.push_back(q.image[x]);
  return closure(q.group, gens);
}

ModuleAction quotient_module_action(const Subgroup& p_sub, const Subgroup& u_sub, std::span<const ElementId> acting) {
  const PermGroup& g = p_sub.group();
  const auto prime = prime_of_p_group(p_sub);
  if (!prime) throw std::invalid_argument("quotient_module_action: P is not a nontrivial p-group");
  const std::int64_t p = *prime;
  const std::int64_t index = p_sub.order() / u_sub.order();
  int n = 0;
  for (std::int64_t t = index; t > 1; t /= p) ++n;

  // Greedy basis in element order; coords maps each element of P to its
  // coordinates modulo U.
  std::map<ElementId, std::vector<std::int64_t>> coords;
  for (ElementId u : u_sub.elements()) coords[u] = std::vector<std::int64_t>(n, 0);
  ModuleAction out;
  out.p = p;
  out.n = n;
  for (ElementId x : p_sub.elements()) {
    if (coords.contains(x)) continue;
    const int k = static_cast<int>(out.basis.size());
    out.basis.push_back(x);
    // Extend: every old element y gives y * x^j with coordinate j in slot k.
    std::vector<std::pair<ElementId, std::vector<std::int64_t>>> old(coords.begin(), coords.end());
    ElementId xj = 0;
    for (std::int64_t j = 1; j < p; ++j) {
      xj = g.mul(xj, x);
      for (const auto& [y, v] : old) {
        auto w = v;
        w[k] = j;
        coords.emplace(g.mul(y, xj), std::move(w));
      }
    }
    if (static_cast<int>(out.basis.size()) > n) throw std::logic_error("quotient_module_action: P/U is not elementary abelian");
  }
  if (static_cast<std::int64_t>(coords.size()) != p_sub.order()) {
    throw std::logic_error("quotient_module_action: P/U is not elementary abelian");
  }
  for (ElementId a : acting) {
    FpMatrix m(p, n, n);
    for (int i = 0; i < n; ++i) {
      const ElementId image = g.conj(out.basis[i], a);
      auto it = coords.find(image);
      if (it == coords.end()) throw std::invalid_argument("quotient_module_action: acting element does not normalize P");
      for (int j = 0; j < n; ++j) m(i, j) = it->second[j];
    }
    out.matrices.push_back(std::move(m));
  }
  return out;
}

Permutation permutation_of_matrix(const FpMatrix& m) {
  const std::int64_t p = m.prime();
  const int n = m.rows();
  const std::int64_t size = checked_pow(p, n);
  std::vector<std::uint32_t> images(static_cast<std::size_t>(size));
  for (std::int64_t i = 0; i < size; ++i) {
    const auto v = vector_from_index(i, p, n);
    images[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(vector_index(m.apply(v), p));
  }
  return Permutation(std::move(images));
}

PermGroup matrix_group_permutations(std::span<const FpMatrix> mats, std::int64_t order_bound) {
  if (mats.empty()) throw std::invalid_argument("matrix_group_permutations: no generators");
  std::vector<Permutation> gens;
  for (const auto& m : mats) gens.push_back(permutation_of_matrix(m));
  return group_from_generators(gens[0].degree(), gens, order_bound);
}

}  // namespace girr
