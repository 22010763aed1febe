#include "girr/numeric_oracle.hpp"

#include <Eigen/Eigenvalues>
#include <random>

namespace girr::reference {

NumericTable numeric_character_table(const PermGroup& g, const ClassStructure& cs) {
  const std::size_t r = cs.classes.size();
  const double n = static_cast<double>(g.order());
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> coeff(0.0, 1.0);
  std::vector<double> c(r);
  for (auto& x : c) x = coeff(rng);
  // a_ijk counted as pairs (x, y) in C_i x C_j with x y = z_k.
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
  for (std::size_t k = 0; k < r; ++k) {
    const auto z = cs.classes[k].representative;
    for (ElementId x = 0; x < static_cast<ElementId>(g.order()); ++x) {
      const ElementId y = g.mul(g.inv(x), z);
      b(static_cast<Eigen::Index>(cs.class_of[y]), static_cast<Eigen::Index>(k)) += c[cs.class_of[x]];
    }
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(b);
  NumericTable out;
  for (Eigen::Index col = 0; col < static_cast<Eigen::Index>(r); ++col) {
    Eigen::VectorXcd w = solver.eigenvectors().col(col);
    w /= w(0);
    std::complex<double> s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      s += w(static_cast<Eigen::Index>(k)) * w(static_cast<Eigen::Index>(cs.inverse_class(k))) /
           static_cast<double>(cs.classes[k].size);
    }
    const double d = std::sqrt(n / s.real());
    std::vector<std::complex<double>> row(r);
    for (std::size_t k = 0; k < r; ++k) row[k] = d * w(static_cast<Eigen::Index>(k)) / static_cast<double>(cs.classes[k].size);
    out.push_back(std::move(row));
  }
  return out;
}

bool matches_numeric(const CharacterTable& t, const NumericTable& numeric, double tol) {
  if (numeric.size() != t.size()) return false;
  std::vector<bool> used(t.size(), false);
  for (const auto& row : numeric) {
    bool found = false;
    for (std::size_t i = 0; i < t.size() && !found; ++i) {
      if (used[i]) continue;
      bool close = true;
      for (std::size_t k = 0; k < t.size() && close; ++k) close = std::abs(t.value(i, k).to_complex() - row[k]) < tol;
      if (close) used[i] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace girr::reference
