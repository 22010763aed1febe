#pragma once

// Hand-built permutation groups, independent of the constructors module.

#include <functional>
#include <vector>

#include "girr/perm_group.hpp"

namespace girr::reference {

using girr::PermGroup;
using girr::Permutation;

inline Permutation cycle(std::size_t degree, std::vector<std::uint32_t> points) {
  return Permutation::from_cycles(degree, {std::move(points)});
}

// Right-regular representation of a group given by a multiplication on 0..n-1.
inline PermGroup regular(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                         const std::vector<std::size_t>& gens) {
  std::vector<Permutation> perms;
  for (std::size_t g : gens) {
    std::vector<std::uint32_t> images(n);
    for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<std::uint32_t>(mul(x, g));
    perms.emplace_back(std::move(images));
  }
  return girr::group_from_generators(n, perms);
}

inline PermGroup cyclic(std::size_t n) {
  return regular(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; }, {1 % n});
}

inline PermGroup symmetric(std::size_t n) {
  std::vector<std::uint32_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<std::uint32_t>(i);
  return girr::group_from_generators(n, {cycle(n, all), cycle(n, {0, 1})});
}

inline PermGroup alternating4() {
  return girr::group_from_generators(4, {cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})});
}

// Dihedral group of order 2n acting on n points.
inline PermGroup dihedral(std::size_t n) {
  std::vector<std::uint32_t> rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<std::uint32_t>((i + 1) % n);
    refl[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return girr::group_from_generators(n, {Permutation(rot), Permutation(refl)});
}

// Quaternion units 1,i,j,k,-1,-i,-j,-k numbered 0..7.
inline std::size_t quaternion_mul(std::size_t a, std::size_t b) {
  static const int table[4][4] = {{0, 1, 2, 3}, {1, 4, 3, 6}, {2, 7, 4, 1}, {3, 2, 5, 4}};
  const std::size_t r = static_cast<std::size_t>(table[a % 4][b % 4]);
  const bool neg = (a >= 4) != (b >= 4);
  return neg ? (r + 4) % 8 : r;
}

inline PermGroup quaternion8() { return regular(8, quaternion_mul, {1, 2}); }

// Upper unitriangular 3x3 matrices over F_p, labeled a + p b + p^2 c.
inline PermGroup heisenberg(std::size_t p) {
  auto mul = [p](std::size_t x, std::size_t y) {
    const std::size_t a = x % p, b = x / p % p, c = x / (p * p);
    const std::size_t a2 = y % p, b2 = y / p % p, c2 = y / (p * p);
    return (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p);
  };
  return regular(p * p * p, mul, {1, p});
}

// Direct product acting on the disjoint union of the point sets.
inline PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<std::uint32_t> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = i < a.degree() ? g[i] : static_cast<std::uint32_t>(i);
    gens.emplace_back(std::move(images));
  }
  for (const auto& g : b.generators()) {
    std::vector<std::uint32_t> images(n);
    for (std::size_t i = 0; i < n; ++i) {
      images[i] = i < a.degree() ? static_cast<std::uint32_t>(i) : static_cast<std::uint32_t>(a.degree() + g[i - a.degree()]);
    }
    gens.emplace_back(std::move(images));
  }
  return girr::group_from_generators(n, gens);
}

// SL(2,3) acting on the 9 vectors of F_3^2.
inline PermGroup sl23() {
  const std::vector<girr::FpMatrix> gens{girr::FpMatrix(3, {{1, 1}, {0, 1}}), girr::FpMatrix(3, {{1, 0}, {1, 1}})};
  return girr::matrix_group_permutations(gens);
}

}  // namespace girr::reference
