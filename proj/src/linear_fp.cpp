#include "girr/linear_fp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "girr/number_theory.hpp"

namespace girr {

namespace {

// Row-reduces `rows` in place over F_p; returns the pivot column of each
// nonzero row (the reduced rows come first).
std::vector<int> row_reduce(std::vector<std::vector<std::int64_t>>& rows, std::int64_t p) {
  std::vector<int> pivots;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const std::int64_t inv = inv_mod(rows[r][c], p);
    for (auto& x : rows[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::int64_t f = rows[i][c];
      for (int k = 0; k < cols; ++k) rows[i][k] = mod(rows[i][k] - f * rows[r][k], p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

FpMatrix::FpMatrix(std::int64_t p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

FpMatrix::FpMatrix(std::int64_t p, std::vector<std::vector<std::int64_t>> rows) : p_(p) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("FpMatrix: ragged rows");
    for (std::int64_t x : row) data_.push_back(mod(x, p));
  }
}

FpMatrix FpMatrix::identity(std::int64_t p, int n) { return scalar(p, n, 1); }

FpMatrix FpMatrix::scalar(std::int64_t p, int n, std::int64_t value) {
  FpMatrix m(p, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = mod(value, p);
  return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& other) const {
  if (cols_ != other.rows_ || p_ != other.p_) throw std::invalid_argument("FpMatrix: shape or field mismatch");
  FpMatrix out(p_, rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out(i, j) = (out(i, j) + a * other(k, j)) % p_;
    }
  }
  return out;
}

FpMatrix FpMatrix::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  FpMatrix result = identity(p_, rows_), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

FpMatrix FpMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("FpMatrix::inverse: not square");
  std::vector<std::vector<std::int64_t>> aug(rows_, std::vector<std::int64_t>(2 * cols_, 0));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug[i][j] = (*this)(i, j);
    aug[i][cols_ + i] = 1;
  }
  const auto pivots = row_reduce(aug, p_);
  if (static_cast<int>(pivots.size()) < rows_ || pivots[rows_ - 1] != rows_ - 1) {
    throw std::domain_error("FpMatrix::inverse: singular matrix");
  }
  FpMatrix out(p_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(i, j) = aug[i][cols_ + j];
  return out;
}

std::int64_t FpMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("FpMatrix::determinant: not square");
  std::vector<std::vector<std::int64_t>> m(rows_, std::vector<std::int64_t>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m[i][j] = (*this)(i, j);
  std::int64_t det = 1;
  for (int c = 0; c < cols_; ++c) {
    int pivot = c;
    while (pivot < rows_ && m[pivot][c] == 0) ++pivot;
    if (pivot == rows_) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = mod(-det, p_);
    }
    det = det * m[c][c] % p_;
    const std::int64_t inv = inv_mod(m[c][c], p_);
    for (int i = c + 1; i < rows_; ++i) {
      const std::int64_t f = m[i][c] * inv % p_;
      for (int k = c; k < cols_; ++k) m[i][k] = mod(m[i][k] - f * m[c][k], p_);
    }
  }
  return det;
}

int FpMatrix::rank() const {
  std::vector<std::vector<std::int64_t>> m(rows_, std::vector<std::int64_t>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m[i][j] = (*this)(i, j);
  return static_cast<int>(row_reduce(m, p_).size());
}

bool FpMatrix::is_identity() const { return rows_ == cols_ && *this == identity(p_, rows_); }

std::int64_t FpMatrix::order() const {
  if (!is_invertible()) throw std::domain_error("FpMatrix::order: singular matrix");
  FpMatrix x = *this;
  std::int64_t k = 1;
  while (!x.is_identity()) {
    x = x * *this;
    if (++k > 10'000'000) throw BoundExceeded("FpMatrix::order: order too large");
  }
  return k;
}

std::vector<std::int64_t> FpMatrix::apply(std::span<const std::int64_t> v) const {
  if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("FpMatrix::apply: length mismatch");
  std::vector<std::int64_t> out(cols_, 0);
  for (int i = 0; i < rows_; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < cols_; ++j) out[j] = (out[j] + v[i] * (*this)(i, j)) % p_;
  }
  return out;
}

std::vector<std::vector<std::int64_t>> FpMatrix::left_nullspace() const {
  // v * M = 0  <=>  M^T v^T = 0: row-reduce M^T.
  std::vector<std::vector<std::int64_t>> t(cols_, std::vector<std::int64_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t[j][i] = (*this)(i, j);
  const auto pivots = row_reduce(t, p_);
  std::vector<bool> is_pivot(rows_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::int64_t>> basis;
  for (int free = 0; free < rows_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::int64_t> v(rows_, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = mod(-t[r][free], p_);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string FpMatrix::to_string() const {
  std::string out = "[";
  for (int i = 0; i < rows_; ++i) {
    out += i ? ",[" : "[";
    for (int j = 0; j < cols_; ++j) out += (j ? "," : "") + std::to_string((*this)(i, j));
    out += "]";
  }
  return out + "]";
}

std::int64_t vector_index(std::span<const std::int64_t> v, std::int64_t p) {
  std::int64_t idx = 0;
  for (std::size_t i = v.size(); i-- > 0;) idx = idx * p + v[i];
  return idx;
}

std::vector<std::int64_t> vector_from_index(std::int64_t index, std::int64_t p, int n) {
  std::vector<std::int64_t> v(n);
  for (int i = 0; i < n; ++i) {
    v[i] = index % p;
    index /= p;
  }
  return v;
}

FpMatrix companion_matrix(std::span<const std::int64_t> poly, std::int64_t p) {
  const int n = static_cast<int>(poly.size()) - 1;
  if (n < 1 || mod(poly[n], p) != 1) throw std::invalid_argument("companion_matrix: polynomial must be monic of degree >= 1");
  FpMatrix m(p, n, n);
  for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
  for (int j = 0; j < n; ++j) m(n - 1, j) = mod(-poly[j], p);
  return m;
}

std::vector<FpMatrix> matrix_group_elements(std::span<const FpMatrix> gens, std::int64_t max_order) {
  if (gens.empty()) throw std::invalid_argument("matrix_group_elements: no generators");
  const FpMatrix one = FpMatrix::identity(gens[0].prime(), gens[0].rows());
  for (const auto& g : gens) {
    if (!g.is_invertible()) throw std::domain_error("matrix_group_elements: singular generator");
  }
  std::vector<FpMatrix> elements{one};
  std::set<FpMatrix> seen{one};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      FpMatrix next = elements[i] * g;
      if (seen.insert(next).second) {
        elements.push_back(std::move(next));
        if (static_cast<std::int64_t>(elements.size()) > max_order) {
          throw BoundExceeded("matrix group order exceeds bound");
        }
      }
    }
  }
  return elements;
}

int spin_dimension(std::span<const std::int64_t> v, std::span<const FpMatrix> gens) {
  if (gens.empty()) return std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; }) ? 1 : 0;
  const std::int64_t p = gens[0].prime();
  std::vector<std::vector<std::int64_t>> basis;
  std::vector<std::vector<std::int64_t>> queue{std::vector<std::int64_t>(v.begin(), v.end())};
  int dim = 0;
  while (!queue.empty()) {
    auto w = std::move(queue.back());
    queue.pop_back();
    auto trial = basis;
    trial.push_back(w);
    if (static_cast<int>(row_reduce(trial, p).size()) == dim) continue;
    basis.push_back(w);
    ++dim;
    for (const auto& g : gens) queue.push_back(g.apply(w));
  }
  return dim;
}

}  // namespace girr
