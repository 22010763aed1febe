#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace girr {

/// Dense matrix over the prime field F_p.  Vectors are rows and matrices act
/// on the right: v -> v * M, so the matrix of "a then b" is a * b.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::int64_t p, int rows, int cols);
  FpMatrix(std::int64_t p, std::vector<std::vector<std::int64_t>> rows);

  static FpMatrix identity(std::int64_t p, int n);
  static FpMatrix scalar(std::int64_t p, int n, std::int64_t value);

  std::int64_t prime() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::int64_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const std::vector<std::int64_t>& data() const { return data_; }

  FpMatrix operator*(const FpMatrix& other) const;
  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
  friend auto operator<=>(const FpMatrix&, const FpMatrix&) = default;

  FpMatrix pow(std::int64_t e) const;
  FpMatrix inverse() const;
  std::int64_t determinant() const;
  int rank() const;
  bool is_identity() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }
  /// Multiplicative order; requires an invertible matrix.
  std::int64_t order() const;

  /// Row vector times matrix.
  std::vector<std::int64_t> apply(std::span<const std::int64_t> v) const;
  /// Basis (as rows) of { v : v * M = 0 }.
  std::vector<std::vector<std::int64_t>> left_nullspace() const;

  std::string to_string() const;

 private:
  std::int64_t p_ = 2;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Index of a vector of F_p^n: sum of v[i] * p^i.
std::int64_t vector_index(std::span<const std::int64_t> v, std::int64_t p);
std::vector<std::int64_t> vector_from_index(std::int64_t index, std::int64_t p, int n);

/// Companion matrix of a monic polynomial (coefficients low degree first).
/// Row i maps e_i to e_{i+1}; the last row holds -c_0 .. -c_{n-1}.
FpMatrix companion_matrix(std::span<const std::int64_t> poly, std::int64_t p);

/// All elements of the group generated by invertible matrices, identity first.
std::vector<FpMatrix> matrix_group_elements(std::span<const FpMatrix> gens, std::int64_t max_order = 500'000);

/// Span of the orbit of v under the matrices (the submodule generated by v).
int spin_dimension(std::span<const std::int64_t> v, std::span<const FpMatrix> gens);

}  // namespace girr
