#include "girr/constructors.hpp"

#include <array>
#include <sstream>

#include "girr/number_theory.hpp"

namespace girr {

namespace {

// Extends images on the first points by a fixed or cycling tail of `extra` points.
Permutation with_tail(std::vector<std::uint32_t> images, std::size_t extra, bool cycle) {
  const std::size_t base = images.size();
  for (std::size_t i = 0; i < extra; ++i) {
    images.push_back(static_cast<std::uint32_t>(base + (cycle ? (i + 1) % extra : i)));
  }
  return Permutation(std::move(images));
}

// Matrix group must be cyclic of prime order when a central height is requested.
FpMatrix cyclic_prime_generator(std::span<const FpMatrix> mats) {
  const auto elems = matrix_group_elements(mats);
  const auto m = static_cast<std::int64_t>(elems.size());
  if (!is_prime(m)) throw std::invalid_argument("central height needs a matrix group of prime order");
  return elems[1];
}

// Builds <translations or regular action, automorphisms> with an optional
// regular orbit of size m^height for the cyclic cover.
PermGroup semidirect(std::size_t base_degree, std::vector<std::vector<std::uint32_t>> normal_gens,
                     std::vector<std::vector<std::uint32_t>> auts, std::int64_t aut_group_order, int height) {
  std::size_t extra = 0;
  if (height > 1) {
    if (auts.size() != 1) throw std::invalid_argument("central height needs one generator");
    extra = static_cast<std::size_t>(checked_pow(aut_group_order, height));
  }
  std::vector<Permutation> gens;
  for (auto& g : normal_gens) gens.push_back(with_tail(std::move(g), extra, false));
  for (auto& a : auts) gens.push_back(with_tail(std::move(a), extra, height > 1));
  const std::int64_t complement = height > 1 ? static_cast<std::int64_t>(extra) : aut_group_order;
  const std::int64_t expected = static_cast<std::int64_t>(base_degree) * complement;
  PermGroup g = group_from_generators(base_degree + extra, gens);
  if (g.order() != expected) throw std::invalid_argument("action is not faithful");
  return g;
}

std::vector<std::uint32_t> matrix_images(const FpMatrix& m) {
  const auto perm = permutation_of_matrix(m);
  return perm.images();
}

// Quaternion units 1, i, j, k as 0..3; labels sign * 4 + unit.
std::pair<int, int> unit_product(int u, int v) {
  static constexpr std::array<std::array<int, 4>, 4> kUnit{{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  static constexpr std::array<std::array<int, 4>, 4> kSign{{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
  return {kSign[u][v], kUnit[u][v]};
}

std::uint32_t q8_mul(std::uint32_t a, std::uint32_t b) {
  const auto [s, u] = unit_product(static_cast<int>(a % 4), static_cast<int>(b % 4));
  const std::uint32_t sign = (a / 4 + b / 4 + static_cast<std::uint32_t>(s)) % 2;
  return sign * 4 + static_cast<std::uint32_t>(u);
}

std::vector<std::uint32_t> q8_right(std::uint32_t x) {
  std::vector<std::uint32_t> out(8);
  for (std::uint32_t a = 0; a < 8; ++a) out[a] = q8_mul(a, x);
  return out;
}

// i -> j -> k -> i, signs preserved.
std::vector<std::uint32_t> q8_rotation(int power) {
  std::vector<std::uint32_t> out(8);
  for (std::uint32_t a = 0; a < 8; ++a) {
    const std::uint32_t u = a % 4;
    const std::uint32_t image = u == 0 ? 0 : (u - 1 + static_cast<std::uint32_t>(power)) % 3 + 1;
    out[a] = (a / 4) * 4 + image;
  }
  return out;
}

// Heisenberg labels a + p b + p^2 c with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
struct Heis {
  std::int64_t p;
  std::uint32_t label(std::int64_t a, std::int64_t b, std::int64_t c) const {
    return static_cast<std::uint32_t>(mod(a, p) + p * mod(b, p) + p * p * mod(c, p));
  }
  std::vector<std::uint32_t> right(std::int64_t x, std::int64_t y) const {
    std::vector<std::uint32_t> out(static_cast<std::size_t>(p * p * p));
    for (std::int64_t c = 0; c < p; ++c) {
      for (std::int64_t b = 0; b < p; ++b) {
        for (std::int64_t a = 0; a < p; ++a) out[label(a, b, c)] = label(a + x, b + y, c + a * y);
      }
    }
    return out;
  }
  // (v, s) -> (vM, det(M) s) with s = c - ab/2.
  std::vector<std::uint32_t> automorphism(const FpMatrix& m) const {
    const std::int64_t half = inv_mod(2, p), det = m.determinant();
    std::vector<std::uint32_t> out(static_cast<std::size_t>(p * p * p));
    for (std::int64_t c = 0; c < p; ++c) {
      for (std::int64_t b = 0; b < p; ++b) {
        for (std::int64_t a = 0; a < p; ++a) {
          const std::int64_t s = mod(c - a * b % p * half, p);
          const std::int64_t a2 = mod(a * m(0, 0) + b * m(1, 0), p), b2 = mod(a * m(0, 1) + b * m(1, 1), p);
          const std::int64_t c2 = mod(det * s + a2 * b2 % p * half, p);
          out[label(a, b, c)] = label(a2, b2, c2);
        }
      }
    }
    return out;
  }
};

void require(bool ok, const std::string& condition) {
  if (!ok) throw ParamsInvalid(condition);
}

FpMatrix scalar_of_order(std::int64_t p, int n, std::int64_t k) {
  return FpMatrix::scalar(p, n, pow_mod(primitive_root(p), (p - 1) / k, p));
}

// Quaternion order for a2 from the parity of d.
std::int64_t a2_quaternion_order(const CaseParams& c) { return c.d % 2 == 1 ? 2 * (c.p + 1) : c.p + 1; }

std::int64_t a6_quaternion_order(const CaseParams& c) { return (c.p * c.p - 1) / c.d; }

}  // namespace

FpMatrix singer_matrix(std::int64_t p, int n) { return companion_matrix(primitive_polynomial(p, n), p); }

PermGroup affine_semidirect(std::int64_t p, int n, std::span<const FpMatrix> mats, int height) {
  if (!is_prime(p) || n < 1 || height < 1) throw std::invalid_argument("affine_semidirect: bad parameters");
  for (const auto& m : mats) {
    if (m.prime() != p || m.rows() != n || !m.is_invertible()) throw std::invalid_argument("singular matrix");
  }
  const auto q = static_cast<std::size_t>(checked_pow(p, n));
  std::vector<std::vector<std::uint32_t>> translations;
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint32_t> images(q);
    for (std::size_t idx = 0; idx < q; ++idx) {
      auto v = vector_from_index(static_cast<std::int64_t>(idx), p, n);
      v[static_cast<std::size_t>(i)] = (v[static_cast<std::size_t>(i)] + 1) % p;
      images[idx] = static_cast<std::uint32_t>(vector_index(v, p));
    }
    translations.push_back(std::move(images));
  }
  std::vector<std::vector<std::uint32_t>> auts;
  std::int64_t order = 0;
  if (height > 1) {
    const FpMatrix g = cyclic_prime_generator(mats);
    auts.push_back(matrix_images(g));
    order = g.order();
  } else {
    for (const auto& m : mats) auts.push_back(matrix_images(m));
    order = static_cast<std::int64_t>(matrix_group_elements(mats).size());
  }
  return semidirect(q, std::move(translations), std::move(auts), order, height);
}

std::pair<FpMatrix, FpMatrix> quaternion_subgroup_SL2(std::int64_t p, std::int64_t order) {
  require(is_prime(p) && p > 2, "p must be an odd prime");
  require(p <= 31, "p exceeds the SL(2,p) scan bound 31");
  require(order >= 8 && (order & (order - 1)) == 0, "quaternion order must be a power of 2 at least 8");
  std::vector<FpMatrix> sl2;
  for (std::int64_t a = 0; a < p; ++a) {
    for (std::int64_t b = 0; b < p; ++b) {
      for (std::int64_t c = 0; c < p; ++c) {
        for (std::int64_t d = 0; d < p; ++d) {
          if (mod(a * d - b * c, p) == 1) sl2.push_back(FpMatrix(p, {{a, b}, {c, d}}));
        }
      }
    }
  }
  for (const auto& x : sl2) {
    if (x.order() != order / 2) continue;
    const FpMatrix central = x.pow(order / 4), x_inv = x.inverse();
    for (const auto& y : sl2) {
      if (y * y == central && y.inverse() * x * y == x_inv) return {x, y};
    }
  }
  throw ParamsInvalid("no quaternion subgroup of order " + std::to_string(order) + " in SL(2," + std::to_string(p) + ")");
}

PermGroup quaternion8() {
  PermGroup g = group_from_generators(8, {Permutation(q8_right(1)), Permutation(q8_right(2))});
  g.set_name("Q8");
  return g;
}

PermGroup heisenberg(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("heisenberg: p must be prime");
  if (p == 2) return quaternion8();
  const Heis h{p};
  PermGroup g = group_from_generators(static_cast<std::size_t>(p * p * p),
                                      {Permutation(h.right(1, 0)), Permutation(h.right(0, 1))});
  g.set_name("Heisenberg(" + std::to_string(p) + ")");
  return g;
}

PermGroup extraspecial_semidirect(std::int64_t p, std::span<const FpMatrix> mats, int height) {
  if (!is_prime(p) || height < 1) throw std::invalid_argument("extraspecial_semidirect: bad parameters");
  for (const auto& m : mats) {
    if (m.prime() != p || m.rows() != 2 || !m.is_invertible()) throw std::invalid_argument("singular matrix");
  }
  std::vector<FpMatrix> gens(mats.begin(), mats.end());
  if (height > 1) gens = {cyclic_prime_generator(mats)};
  const auto order = static_cast<std::int64_t>(matrix_group_elements(mats).size());

  std::vector<std::vector<std::uint32_t>> normal, auts;
  if (p == 2) {
    const FpMatrix s = singer_matrix(2, 2);
    normal = {q8_right(1), q8_right(2)};
    for (const auto& m : gens) {
      int power = -1;
      for (int k = 0; k < 3; ++k) {
        if (m == s.pow(k)) power = k;
      }
      if (power < 0) throw std::invalid_argument("only the order-3 automorphisms of Q8 are supported");
      auts.push_back(q8_rotation(power));
    }
    return semidirect(8, std::move(normal), std::move(auts), order, height);
  }
  const Heis h{p};
  normal = {h.right(1, 0), h.right(0, 1)};
  for (const auto& m : gens) auts.push_back(h.automorphism(m));
  return semidirect(static_cast<std::size_t>(p * p * p), std::move(normal), std::move(auts), order, height);
}

std::int64_t case_order(const CaseParams& c) {
  require(is_prime(c.p), "p is not prime");
  require(c.n >= 1, "n must be positive");
  require(c.d >= 1 && (c.p - 1) % c.d == 0, "d must divide p-1");
  require(c.height >= 1, "height must be positive");
  const bool central = c.tag == CaseTag::a3 || c.tag == CaseTag::a7;
  require(central || c.height == 1, "height > 1 only applies to a3 and a7");
  const bool extraspecial = c.tag >= CaseTag::a4 && c.tag <= CaseTag::a7;
  require(!extraspecial || c.n == 2, "n must be 2 for an extraspecial P");
  const std::int64_t q = checked_pow(c.p, c.n), p3 = c.p * c.p * c.p;

  switch (c.tag) {
    case CaseTag::a1:
      return q * ((q - 1) / c.d);
    case CaseTag::a2:
      require(c.n == 2, "n must be 2");
      require(is_mersenne_prime(c.p), "p must be a Mersenne prime");
      require(a2_quaternion_order(c) >= 8, "quaternion factor Q_" + std::to_string(a2_quaternion_order(c)) + " is too small");
      return q * ((q - 1) / c.d);
    case CaseTag::a3: {
      const std::int64_t r = (q - 1) / (c.p - 1);
      require(c.n >= 2 && is_prime(r), "(p^n-1)/(p-1) must be prime");
      require(c.d == c.p - 1, "d must equal p-1");
      require(c.height >= 2, "height must be at least 2");
      return q * checked_pow(r, c.height);
    }
    case CaseTag::a4:
      require(c.p > 2, "p must be odd");
      require(2 * c.d == c.p - 1, "d must equal (p-1)/2");
      return p3 * 2 * (c.p + 1);
    case CaseTag::a5:
      require(c.d == c.p - 1, "d must equal p-1");
      return p3 * (c.p + 1);
    case CaseTag::a6:
      require(c.p > 2 && is_mersenne_prime(c.p), "p must be an odd Mersenne prime");
      require(2 * c.d == c.p - 1 || c.d == c.p - 1, "d must be (p-1)/2 or p-1");
      require(a6_quaternion_order(c) >= 8, "quaternion order (p^2-1)/d must be at least 8");
      return p3 * a6_quaternion_order(c);
    case CaseTag::a7:
      require(c.p == 2, "p must be 2");
      require(c.d == 1, "d must be 1");
      require(c.height >= 2, "height must be at least 2");
      return 8 * checked_pow(3, c.height);
  }
  throw std::logic_error("unknown case tag");
}

std::vector<FpMatrix> case_matrices(const CaseParams& c) {
  case_order(c);
  const std::int64_t p = c.p;
  switch (c.tag) {
    case CaseTag::a1: return {singer_matrix(p, c.n).pow(c.d)};
    case CaseTag::a2: {
      const std::int64_t qorder = a2_quaternion_order(c);
      const auto [x, y] = quaternion_subgroup_SL2(p, qorder);
      const std::int64_t scalars = (p * p - 1) / c.d / qorder;
      return {x, y, scalar_of_order(p, 2, scalars)};
    }
    case CaseTag::a3:
    case CaseTag::a5: return {singer_matrix(p, c.n).pow(p - 1)};
    case CaseTag::a4: return {singer_matrix(p, 2).pow((p - 1) / 2)};
    case CaseTag::a6: {
      const auto [x, y] = quaternion_subgroup_SL2(p, a6_quaternion_order(c));
      return {x, y};
    }
    case CaseTag::a7: return {singer_matrix(2, 2)};
  }
  throw std::logic_error("unknown case tag");
}

PermGroup build_case(const CaseParams& c) {
  const auto mats = case_matrices(c);
  PermGroup g;
  if (c.tag <= CaseTag::a3) {
    g = affine_semidirect(c.p, c.n, mats, c.height);
  } else {
    g = extraspecial_semidirect(c.p, mats, c.height);
  }
  if (g.order() != case_order(c)) throw std::logic_error("constructed order differs from the case formula");
  g.set_name(describe(c));
  return g;
}

void validate_case(const CaseParams& c) {
  const auto mats = case_matrices(c);
  require(check_frobenius_action(mats, c.p, c.n), "H does not act Frobeniusly on P/U");
  require(check_irreducible_action(mats, c.p, c.n), "H does not act irreducibly on P/U");
  require(check_scalar_transitivity(mats, c.p, c.n), "H with scalars is not transitive on nonzero vectors of P/U");
}

PermGroup construct_case(const CaseParams& c) {
  validate_case(c);
  return build_case(c);
}

std::string describe(const CaseParams& c) {
  std::ostringstream out;
  out << to_string(c.tag) << "(p=" << c.p << ",n=" << c.n << ",d=" << c.d;
  if (c.height > 1) out << ",h=" << c.height;
  out << ")";
  return out.str();
}

}  // namespace girr
