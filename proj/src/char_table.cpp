#include "girr/char_table.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "girr/number_theory.hpp"

namespace girr {

namespace {

using Vec = std::vector<std::int64_t>;
using RootRep = std::vector<std::pair<std::int32_t, std::int32_t>>;

// Dense row-major matrix over F_l.
struct Mat {
  int rows = 0;
  int cols = 0;
  Vec a;

  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  std::int64_t& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  std::int64_t operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

Mat multiply(const Mat& x, const Mat& y, std::int64_t l) {
  Mat out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    std::int64_t* row = &out.a[static_cast<std::size_t>(i) * out.cols];
    for (int k = 0; k < x.cols; ++k) {
      const std::int64_t f = x(i, k);
      if (f == 0) continue;
      const std::int64_t* yr = &y.a[static_cast<std::size_t>(k) * y.cols];
      for (int j = 0; j < y.cols; ++j) row[j] = (row[j] + f * yr[j]) % l;
    }
  }
  return out;
}

// B = sum_i c_i M_i with (M_i)_{jk} = #{x in C_i : x^-1 z_k in C_j}, built by
// one pass over the group per class.
Mat combination_matrix(const PermGroup& g, const ClassStructure& cs, const Vec& c, std::int64_t l) {
  const int r = static_cast<int>(cs.classes.size());
  Mat b(r, r);
  const auto n = static_cast<ElementId>(g.order());
  for (int k = 0; k < r; ++k) {
    const ElementId z = cs.classes[k].representative;
    for (ElementId x = 0; x < n; ++x) {
      const std::size_t j = cs.class_of[g.mul(g.inv(x), z)];
      b(static_cast<int>(j), k) += c[cs.class_of[x]];
    }
  }
  for (auto& v : b.a) v %= l;
  return b;
}

// Reduces `a` to upper Hessenberg form in place and returns Q with
// a_original = Q * a * Q^-1.
Mat hessenberg(Mat& a, std::int64_t l) {
  const int m = a.rows;
  Mat q = Mat::identity(m);
  for (int j = 0; j + 2 < m; ++j) {
    int piv = j + 1;
    while (piv < m && a(piv, j) == 0) ++piv;
    if (piv == m) continue;
    if (piv != j + 1) {
      for (int c = 0; c < m; ++c) std::swap(a(piv, c), a(j + 1, c));
      for (int r = 0; r < m; ++r) std::swap(a(r, piv), a(r, j + 1));
      for (int r = 0; r < m; ++r) std::swap(q(r, piv), q(r, j + 1));
    }
    const std::int64_t inv = inv_mod(a(j + 1, j), l);
    for (int k = j + 2; k < m; ++k) {
      if (a(k, j) == 0) continue;
      const std::int64_t f = a(k, j) * inv % l;
      for (int c = j; c < m; ++c) a(k, c) = mod(a(k, c) - f * a(j + 1, c), l);
      for (int r = 0; r < m; ++r) a(r, j + 1) = (a(r, j + 1) + f * a(r, k)) % l;
      for (int r = 0; r < m; ++r) q(r, j + 1) = (q(r, j + 1) + f * q(r, k)) % l;
    }
  }
  return q;
}

// det(xI - H) for upper Hessenberg H, low degree first.
Vec hessenberg_charpoly(const Mat& h, std::int64_t l) {
  const int m = h.rows;
  std::vector<Vec> p(m + 1);
  p[0] = {1};
  for (int k = 1; k <= m; ++k) {
    Vec next(k + 1, 0);
    const std::int64_t diag = h(k - 1, k - 1);
    for (int i = 0; i < k; ++i) {
      next[i + 1] = (next[i + 1] + p[k - 1][i]) % l;
      next[i] = mod(next[i] - diag * p[k - 1][i], l);
    }
    std::int64_t t = 1;
    for (int i = 1; i < k; ++i) {
      t = t * h(k - i, k - i - 1) % l;
      if (t == 0) break;
      const std::int64_t f = t * h(k - i - 1, k - 1) % l;
      if (f == 0) continue;
      const Vec& lower = p[k - i - 1];
      for (std::size_t s = 0; s < lower.size(); ++s) next[s] = mod(next[s] - f * lower[s], l);
    }
    p[k] = std::move(next);
  }
  return p[m];
}

// Roots in F_l with multiplicities.
std::vector<std::pair<std::int64_t, int>> roots_with_multiplicity(Vec poly, std::int64_t l) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t x = 0; x < l && poly.size() > 1; ++x) {
    int mult = 0;
    while (poly.size() > 1) {
      // Synthetic division by (X - x).
      Vec quo(poly.size() - 1);
      std::int64_t acc = 0;
      for (std::size_t i = poly.size(); i-- > 0;) {
        acc = (acc * x + poly[i]) % l;
        if (i > 0) quo[i - 1] = acc;
      }
      if (acc != 0) break;
      poly = std::move(quo);
      ++mult;
    }
    if (mult > 0) out.emplace_back(x, mult);
  }
  return out;
}

// Basis of ker(H - lambda I) for upper Hessenberg H in O(m^2) per vector.
std::vector<Vec> hessenberg_kernel(const Mat& h, std::int64_t lambda, std::int64_t l) {
  const int m = h.rows;
  Mat u = h;
  for (int i = 0; i < m; ++i) u(i, i) = mod(u(i, i) - lambda, l);
  for (int i = 0; i + 1 < m; ++i) {
    if (u(i, i) == 0 && u(i + 1, i) != 0) {
      for (int c = i; c < m; ++c) std::swap(u(i, c), u(i + 1, c));
    }
    if (u(i + 1, i) == 0) continue;
    const std::int64_t f = u(i + 1, i) * inv_mod(u(i, i), l) % l;
    for (int c = i; c < m; ++c) u(i + 1, c) = mod(u(i + 1, c) - f * u(i, c), l);
  }
  // u is upper triangular.  Rows with a zero diagonal are reduced against
  // the rows to their right until they claim a free column or vanish.
  std::vector<int> pivot_row(m, -1);
  for (int i = 0; i < m; ++i) {
    if (u(i, i) != 0) pivot_row[i] = i;
  }
  for (int f = 0; f < m; ++f) {
    if (u(f, f) != 0) continue;
    for (int c = f + 1; c < m; ++c) {
      if (u(f, c) == 0) continue;
      if (pivot_row[c] < 0) {
        pivot_row[c] = f;
        break;
      }
      const int r = pivot_row[c];
      const std::int64_t factor = u(f, c) * inv_mod(u(r, c), l) % l;
      for (int k = c; k < m; ++k) u(f, k) = mod(u(f, k) - factor * u(r, k), l);
    }
  }
  std::vector<Vec> basis;
  for (int free = 0; free < m; ++free) {
    if (pivot_row[free] >= 0) continue;
    Vec v(m, 0);
    v[free] = 1;
    for (int c = m; c-- > 0;) {
      const int r = pivot_row[c];
      if (r < 0) continue;
      std::int64_t acc = 0;
      for (int k = c + 1; k < m; ++k) acc = (acc + u(r, k) * v[k]) % l;
      v[c] = mod(-acc * inv_mod(u(r, c), l), l);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Matrix A with B V = V A, for V of full column rank spanning a B-invariant space.
Mat restrict_to(const Mat& b, const Mat& v, std::int64_t l) {
  const int r = v.rows, m = v.cols;
  const Mat bv = multiply(b, v, l);
  Mat t = v;
  std::vector<int> pivots;
  std::vector<bool> used(r, false);
  for (int c = 0; c < m; ++c) {
    int p = 0;
    while (p < r && (used[p] || t(p, c) == 0)) ++p;
    if (p == r) throw VerificationError("restrict_to: basis is rank deficient");
    used[p] = true;
    pivots.push_back(p);
    const std::int64_t inv = inv_mod(t(p, c), l);
    for (int c2 = c + 1; c2 < m; ++c2) {
      const std::int64_t f = t(p, c2) * inv % l;
      if (f == 0) continue;
      for (int i = 0; i < r; ++i) t(i, c2) = mod(t(i, c2) - f * t(i, c), l);
    }
  }
  // Solve S A = R with S, R the pivot rows of V and BV.
  Mat aug(m, 2 * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      aug(i, j) = v(pivots[i], j);
      aug(i, m + j) = bv(pivots[i], j);
    }
  }
  for (int c = 0; c < m; ++c) {
    int p = c;
    while (p < m && aug(p, c) == 0) ++p;
    if (p == m) throw VerificationError("restrict_to: singular pivot block");
    for (int k = 0; k < 2 * m; ++k) std::swap(aug(p, k), aug(c, k));
    const std::int64_t inv = inv_mod(aug(c, c), l);
    for (int k = 0; k < 2 * m; ++k) aug(c, k) = aug(c, k) * inv % l;
    for (int i = 0; i < m; ++i) {
      if (i == c || aug(i, c) == 0) continue;
      const std::int64_t f = aug(i, c);
      for (int k = 0; k < 2 * m; ++k) aug(i, k) = mod(aug(i, k) - f * aug(c, k), l);
    }
  }
  Mat a(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a(i, j) = aug(i, m + j);
  return a;
}

// Common eigenvectors of the class matrices, each normalized to w[0] = 1.
std::vector<Vec> central_characters(const PermGroup& g, const ClassStructure& cs, std::int64_t l,
                                    std::mt19937_64& rng) {
  const int r = static_cast<int>(cs.classes.size());
  std::vector<Mat> pending{Mat::identity(r)};
  std::vector<Vec> found;
  int stalls = 0;
  while (!pending.empty()) {
    Vec coeffs(r);
    for (auto& x : coeffs) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(l));
    const Mat b = combination_matrix(g, cs, coeffs, l);
    std::vector<Mat> next;
    bool split = false;
    for (const Mat& v : pending) {
      const int m = v.cols;
      Mat h = m == r ? b : restrict_to(b, v, l);
      const Mat q = hessenberg(h, l);
      const auto roots = roots_with_multiplicity(hessenberg_charpoly(h, l), l);
      int total = 0;
      for (const auto& [x, mult] : roots) total += mult;
      if (total != m) throw VerificationError("class matrix eigenvalues do not lie in the Dixon field");
      if (roots.size() == 1 && m > 1) {
        next.push_back(v);
        continue;
      }
      split = true;
      const Mat w = multiply(v, q, l);
      for (const auto& [x, mult] : roots) {
        const auto kernel = hessenberg_kernel(h, x, l);
        if (static_cast<int>(kernel.size()) != mult) throw VerificationError("class matrix combination is not diagonalizable");
        Mat sub(r, mult);
        for (int c = 0; c < mult; ++c) {
          for (int i = 0; i < r; ++i) {
            std::int64_t acc = 0;
            for (int j = 0; j < m; ++j) acc = (acc + w(i, j) * kernel[c][j]) % l;
            sub(i, c) = acc;
          }
        }
        if (mult > 1) {
          next.push_back(std::move(sub));
          continue;
        }
        Vec col(r);
        for (int i = 0; i < r; ++i) col[i] = sub(i, 0);
        if (col[0] == 0) throw VerificationError("eigenvector vanishes on the identity class");
        const std::int64_t inv = inv_mod(col[0], l);
        for (auto& x2 : col) x2 = x2 * inv % l;
        found.push_back(std::move(col));
      }
    }
    stalls = split ? 0 : stalls + 1;
    if (stalls > 64) throw VerificationError("eigenspace splitting made no progress");
    pending = std::move(next);
  }
  return found;
}

// True iff sum_j buf[j] zeta_e^j is zero; buf is consumed.
bool vanishes_mod_phi(Vec& buf, std::int64_t e) {
  const Vec& phi = cyclotomic_polynomial(e);
  const std::size_t deg = phi.size() - 1;
  std::vector<std::pair<std::size_t, std::int64_t>> terms;
  for (std::size_t i = 0; i < deg; ++i) {
    if (phi[i] != 0) terms.emplace_back(i, phi[i]);
  }
  for (std::size_t k = buf.size(); k-- > deg;) {
    const std::int64_t c = buf[k];
    if (c == 0) continue;
    buf[k] = 0;
    for (const auto& [i, coeff] : terms) buf[k - deg + i] -= c * coeff;
  }
  for (std::size_t i = 0; i < deg && i < buf.size(); ++i) {
    if (buf[i] != 0) return false;
  }
  return true;
}

std::size_t conjugate_row(const CharacterTable& t, std::size_t row, std::int64_t k) {
  const auto& cs = t.classes();
  std::vector<std::uint32_t> ids(t.size());
  for (std::size_t c = 0; c < ids.size(); ++c) ids[c] = t.value_id(row, cs.classes[c].power_map[static_cast<std::size_t>(k)]);
  const auto found = t.find_row(ids);
  if (!found) throw VerificationError("Galois image of a row is not in the table");
  return *found;
}

std::int64_t normalized_unit(const CharacterTable& t, std::int64_t k) {
  const std::int64_t e = t.exponent();
  const std::int64_t kk = mod(k, e);
  if (gcd(kk, e) != 1) throw std::invalid_argument("Galois action: k is not a unit modulo the exponent");
  return kk;
}

}  // namespace

std::optional<std::size_t> CharacterTable::find_row(const std::vector<std::uint32_t>& ids) const {
  auto it = row_lookup_.find(ids);
  if (it == row_lookup_.end()) return std::nullopt;
  return it->second;
}

CharacterTable character_table(const PermGroup& g, std::uint64_t seed) {
  CharacterTable t;
  t.group_ = &g;
  t.seed_ = seed;
  t.classes_ = conjugacy_classes(g);
  const auto& cs = t.classes_;
  const std::int64_t n = g.order();
  const std::int64_t e = cs.exponent;
  const std::size_t r = cs.classes.size();
  const std::int64_t l = find_dixon_prime(e, n);
  if (l >= (std::int64_t{1} << 31)) throw BoundExceeded("Dixon prime exceeds 2^31");
  t.dixon_prime_ = l;
  for (std::int64_t k = 0; k < e; ++k) {
    if (gcd(k, e) == 1) t.units_.push_back(k);
  }

  std::mt19937_64 rng(seed);
  const auto central = central_characters(g, cs, l, rng);
  if (central.size() != r) throw VerificationError("wrong number of central characters");

  const std::int64_t omega = pow_mod(primitive_root(l), (l - 1) / e, l);
  Vec omega_pow(static_cast<std::size_t>(e));
  std::vector<std::int32_t> dlog(static_cast<std::size_t>(l), -1);
  for (std::int64_t j = 0, x = 1; j < e; ++j, x = x * omega % l) {
    omega_pow[j] = x;
    dlog[x] = static_cast<std::int32_t>(j);
  }

  struct Row {
    std::int64_t degree;
    std::vector<RootRep> roots;
  };
  std::vector<Row> rows;
  for (const Vec& w : central) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t kinv = cs.inverse_class(k);
      s = (s + w[k] * w[kinv] % l * inv_mod(cs.classes[k].size % l, l)) % l;
    }
    if (s == 0) throw VerificationError("degree normalization vanishes");
    const std::int64_t d2 = n % l * inv_mod(s, l) % l;
    std::int64_t d = 0;
    for (std::int64_t c = 1; c * c <= n; ++c) {
      if (c * c % l == d2) {
        d = c;
        break;
      }
    }
    if (d == 0) throw VerificationError("no admissible character degree");

    Vec chi(r);
    for (std::size_t k = 0; k < r; ++k) chi[k] = d % l * w[k] % l * inv_mod(cs.classes[k].size % l, l) % l;

    Row row{d, std::vector<RootRep>(r)};
    for (std::size_t k = 0; k < r; ++k) {
      const auto& cls = cs.classes[k];
      const std::int64_t step = e / cls.element_order;
      RootRep rep;
      if (d == 1) {
        const std::int32_t j = dlog[chi[k]];
        if (j < 0 || j % step != 0) throw VerificationError("linear character value is not a root of unity");
        rep.emplace_back(j, 1);
      } else {
        // Power sums chi(g^j) -> elementary symmetric functions -> char poly of rho(g).
        Vec power(d + 1), elem(d + 1, 0);
        for (std::int64_t j = 1; j <= d; ++j) power[j] = chi[cls.power_map[static_cast<std::size_t>(j % e)]];
        elem[0] = 1;
        for (std::int64_t j = 1; j <= d; ++j) {
          std::int64_t acc = 0;
          for (std::int64_t i = 1; i <= j; ++i) {
            const std::int64_t term = elem[j - i] * power[i] % l;
            acc = (i % 2 == 1) ? (acc + term) % l : mod(acc - term, l);
          }
          elem[j] = acc * inv_mod(j, l) % l;
        }
        // f(x) = sum_j (-1)^j elem[j] x^(d-j), stored low degree first.
        Vec poly(d + 1);
        for (std::int64_t j = 0; j <= d; ++j) poly[d - j] = (j % 2 == 0) ? elem[j] : mod(-elem[j], l);
        std::int64_t total = 0;
        for (std::int64_t t2 = 0; t2 < cls.element_order && total < d; ++t2) {
          const std::int64_t x = omega_pow[static_cast<std::size_t>(t2 * step)];
          int mult = 0;
          while (poly.size() > 1) {
            Vec quo(poly.size() - 1);
            std::int64_t acc = 0;
            for (std::size_t i = poly.size(); i-- > 0;) {
              acc = (acc * x + poly[i]) % l;
              if (i > 0) quo[i - 1] = acc;
            }
            if (acc != 0) break;
            poly = std::move(quo);
            ++mult;
          }
          if (mult > 0) {
            rep.emplace_back(static_cast<std::int32_t>(t2 * step), mult);
            total += mult;
          }
        }
        if (total != d) throw VerificationError("character value is not a sum of roots of unity");
      }
      row.roots[k] = std::move(rep);
    }
    rows.push_back(std::move(row));
  }

  // Exact values, interned through the canonical form at conductor e.
  std::map<RootRep, std::uint32_t> rep_ids;
  std::map<std::vector<std::int64_t>, std::uint32_t> canonical_ids;
  std::vector<std::vector<CyclotomicNumber>> values(r, std::vector<CyclotomicNumber>(r));
  std::vector<std::vector<std::uint32_t>> ids(r, std::vector<std::uint32_t>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      const RootRep& rep = rows[i].roots[k];
      const std::int64_t o = cs.classes[k].element_order;
      const std::int64_t step = e / o;
      Vec mults(static_cast<std::size_t>(o), 0);
      for (const auto& [x, m] : rep) mults[x / step] += m;
      values[i][k] = CyclotomicNumber::from_root_multiplicities(o, mults);
      auto it = rep_ids.find(rep);
      if (it == rep_ids.end()) {
        Vec dense(static_cast<std::size_t>(e), 0);
        for (const auto& [x, m] : rep) dense[x] += m;
        const auto canon = CyclotomicNumber::from_root_multiplicities(e, dense);
        std::vector<std::int64_t> key{canon.conductor()};
        for (const auto& term : canon.terms()) {
          key.push_back(term.exponent);
          key.push_back(term.coeff);
        }
        const auto next_id = static_cast<std::uint32_t>(canonical_ids.size());
        const std::uint32_t id = canonical_ids.emplace(std::move(key), next_id).first->second;
        it = rep_ids.emplace(rep, id).first;
      }
      ids[i][k] = it->second;
    }
  }

  std::vector<std::size_t> order(r);
  for (std::size_t i = 0; i < r; ++i) order[i] = i;
  const auto is_principal = [&](std::size_t i) {
    for (std::size_t k = 0; k < r; ++k) {
      if (ids[i][k] != ids[i][0]) return false;
    }
    return rows[i].degree == 1;
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (rows[a].degree != rows[b].degree) return rows[a].degree < rows[b].degree;
    const bool pa = is_principal(a), pb = is_principal(b);
    if (pa != pb) return pa;
    for (std::size_t k = 0; k < r; ++k) {
      if (ids[a][k] == ids[b][k]) continue;
      return compare(values[a][k], values[b][k]) > 0;
    }
    return false;
  });
  for (std::size_t i : order) {
    t.degrees_.push_back(rows[i].degree);
    t.values_.push_back(std::move(values[i]));
    t.ids_.push_back(std::move(ids[i]));
    t.roots_.push_back(std::move(rows[i].roots));
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (!t.row_lookup_.emplace(t.ids_[i], i).second) throw VerificationError("duplicate rows in character table");
  }

  std::int64_t sum_sq = 0;
  for (std::int64_t d : t.degrees_) sum_sq += d * d;
  if (sum_sq != n) throw VerificationError("sum of squared degrees differs from the group order");
  verify_orthogonality(t);
  return t;
}

void verify_orthogonality(const CharacterTable& t) {
  const auto& cs = t.classes();
  const std::size_t r = t.size();
  const std::int64_t e = t.exponent();
  const std::int64_t n = t.group().order();
  Vec buf(static_cast<std::size_t>(e));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a; b < r; ++b) {
      std::fill(buf.begin(), buf.end(), 0);
      for (std::size_t k = 0; k < r; ++k) {
        const std::int64_t size = cs.classes[k].size;
        for (const auto& [s, m] : t.roots(a, k)) {
          for (const auto& [u, m2] : t.roots(b, k)) buf[mod(s - u, e)] += size * m * m2;
        }
      }
      if (a == b) buf[0] -= n;
      if (!vanishes_mod_phi(buf, e)) {
        throw VerificationError("row orthogonality fails for rows " + std::to_string(a) + ", " + std::to_string(b));
      }
    }
  }
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = j; k < r; ++k) {
      std::fill(buf.begin(), buf.end(), 0);
      for (std::size_t a = 0; a < r; ++a) {
        for (const auto& [s, m] : t.roots(a, j)) {
          for (const auto& [u, m2] : t.roots(a, k)) buf[mod(s - u, e)] += m * m2;
        }
      }
      if (j == k) buf[0] -= n / cs.classes[j].size;
      if (!vanishes_mod_phi(buf, e)) {
        throw VerificationError("column orthogonality fails for classes " + std::to_string(j) + ", " + std::to_string(k));
      }
    }
  }
}

Character CharacterTable::character(std::size_t row) const {
  Character c;
  c.index = row;
  c.values = values_[row];
  c.degree = degrees_[row];
  c.kernel = kernel_of(*this, row);
  c.galois_stabilizer = galois_stabilizer(*this, row);
  return c;
}

Subgroup kernel_of(const CharacterTable& t, std::size_t row) {
  const auto& cs = t.classes();
  std::vector<ElementId> members;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t.value(row, k).rational_value() == t.degree(row)) {
      members.insert(members.end(), cs.classes[k].members.begin(), cs.classes[k].members.end());
    }
  }
  Subgroup kernel = subgroup_from_elements(t.group(), std::move(members));
  if (!is_normal(kernel, t.group().whole())) throw VerificationError("character kernel is not normal");
  return kernel;
}

std::size_t galois_conjugate(const CharacterTable& t, std::size_t row, std::int64_t k) {
  const std::int64_t kk = normalized_unit(t, k);
  const std::size_t target = conjugate_row(t, row, kk);
  for (std::size_t c = 0; c < t.size(); ++c) {
    const CyclotomicNumber& v = t.value(row, c);
    if (v.galois(mod(kk, v.conductor())) != t.value(target, c)) {
      throw VerificationError("power-map and entrywise Galois actions disagree");
    }
  }
  return target;
}

std::vector<std::vector<std::size_t>> galois_orbits(const CharacterTable& t) {
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<bool> seen(t.size(), false);
  for (std::size_t row = 0; row < t.size(); ++row) {
    if (seen[row]) continue;
    std::vector<std::size_t> orbit;
    for (std::int64_t k : t.units()) {
      const std::size_t image = conjugate_row(t, row, k);
      if (!seen[image]) {
        seen[image] = true;
        orbit.push_back(image);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::vector<std::int64_t> galois_stabilizer(const CharacterTable& t, std::size_t row) {
  std::vector<std::int64_t> out;
  for (std::int64_t k : t.units()) {
    if (conjugate_row(t, row, k) == row) out.push_back(k);
  }
  return out;
}

bool is_rational_row(const CharacterTable& t, std::size_t row) {
  for (std::size_t c = 0; c < t.size(); ++c) {
    if (!t.value(row, c).is_rational()) return false;
  }
  return true;
}

bool field_in_pth_cyclotomic(const CharacterTable& t, std::size_t row, std::int64_t p) {
  const std::int64_t e = t.exponent();
  if (e % p != 0) return is_rational_row(t, row);
  for (std::int64_t k : t.units()) {
    if (k % p == 1 % p && conjugate_row(t, row, k) != row) return false;
  }
  return true;
}

std::size_t rational_class_count(const CharacterTable& t) {
  const auto& cs = t.classes();
  std::size_t count = 0;
  for (std::size_t c = 0; c < cs.classes.size(); ++c) {
    bool fixed = true;
    for (std::int64_t k : t.units()) {
      if (cs.classes[c].power_map[static_cast<std::size_t>(k)] != c) {
        fixed = false;
        break;
      }
    }
    if (fixed) ++count;
  }
  return count;
}

}  // namespace girr
