#pragma once

#include "mb/linalg/matrix.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace mb {

/// Column-compressed rational matrix. Chain maps on tensor powers are
/// mostly permutations and block identities, so dense storage would waste
/// most of its time multiplying zeros.
class SparseMatrix {
 public:
  using Entry = std::pair<std::uint32_t, Rational>;
  using Column = std::vector<Entry>;  // sorted by row, no explicit zeros

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(cols) {}

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const RatMatrix& m);
  static SparseMatrix from_dense(const IntMatrix& m);
  /// Column j has a single 1 in row perm[j].
  static SparseMatrix permutation(const std::vector<std::size_t>& perm, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  const Column& column(std::size_t j) const { return data_[j]; }
  Rational at(std::size_t i, std::size_t j) const;
  /// Overwrites one entry; zero erases.
  void set(std::size_t i, std::size_t j, const Rational& value);
  /// Appends to column j; rows must arrive in increasing order and be nonzero.
  void push(std::size_t i, std::size_t j, Rational value) { data_[j].emplace_back(static_cast<std::uint32_t>(i), std::move(value)); }
  void set_column(std::size_t j, Column column) { data_[j] = std::move(column); }

  SparseMatrix operator*(const SparseMatrix& other) const;
  SparseMatrix operator+(const SparseMatrix& other) const;
  SparseMatrix operator-(const SparseMatrix& other) const;
  SparseMatrix operator-() const;
  SparseMatrix scaled(const Rational& factor) const;
  bool operator==(const SparseMatrix& other) const;
  bool operator!=(const SparseMatrix& other) const { return !(*this == other); }
  bool is_zero() const;
  bool is_integral() const;

  SparseMatrix transpose() const;
  RatMatrix to_dense() const;
  IntMatrix to_int_dense() const;

  SparseMatrix select_columns(std::size_t c0, std::size_t n) const;
  SparseMatrix select_rows(std::size_t r0, std::size_t n) const;

  static SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b);
  static SparseMatrix vstack(const SparseMatrix& a, const SparseMatrix& b);
  static SparseMatrix block_diag(const SparseMatrix& a, const SparseMatrix& b);
  static SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

  /// Places `m` at (r0, c0) inside a zero matrix of the given shape.
  static SparseMatrix embed(const SparseMatrix& m, std::size_t rows, std::size_t cols, std::size_t r0, std::size_t c0);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Column> data_;
};

std::string to_string(const SparseMatrix& m);

}  // namespace mb
