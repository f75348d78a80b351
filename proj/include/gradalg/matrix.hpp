#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gradalg/scalar.hpp"

namespace gradalg {

using SparseEntry = std::pair<std::uint32_t, Cyclotomic>;
// Sorted by index, no stored zeros.
using SparseVec = std::vector<SparseEntry>;

// v + c*w
SparseVec axpy(const SparseVec& v, const Cyclotomic& c, const SparseVec& w);
Cyclotomic sparse_get(const SparseVec& v, std::uint32_t i);

/// Column-major sparse matrix over Q(zeta_N).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_dense(const std::vector<std::vector<Cyclotomic>>& rows, std::size_t ncols = 0);
  static Matrix kron(const Matrix& a, const Matrix& b);
  static Matrix from_columns(std::size_t rows, std::vector<SparseVec> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Cyclotomic get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Cyclotomic& v);
  void add(std::size_t r, std::size_t c, const Cyclotomic& v);

  const SparseVec& col(std::size_t c) const { return data_[c]; }
  void set_col(std::size_t c, SparseVec v) { data_[c] = std::move(v); }

  std::vector<std::vector<Cyclotomic>> to_dense() const;
  std::size_t nnz() const;
  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  Matrix select_cols(const std::vector<std::size_t>& cols) const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& b);
  Matrix& operator-=(const Matrix& b);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Cyclotomic& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  // Matrix-vector product for a sparse vector.
  SparseVec apply(const SparseVec& v) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<SparseVec> data_;
};

bool operator==(const SparseEntry& a, const SparseEntry& b);

}  // namespace gradalg
