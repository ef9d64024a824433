#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "afcore/rational.hpp"

namespace afcore {

// Square sparse matrix with exact rational entries, stored as sorted rows.
// All truncated operators (Toeplitz tensors, path-space shifts) are very
// sparse: a handful of entries per row at most.
class SparseMatrix {
 public:
  using Index = std::uint32_t;
  using Entry = std::pair<Index, Rational>;
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  explicit SparseMatrix(std::size_t dim) : rows_(dim) {}

  static SparseMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t nonzeros() const;
  bool is_zero() const;

  const Row& row(std::size_t r) const { return rows_[r]; }
  Row& row(std::size_t r) { return rows_[r]; }

  // Inserts or accumulates; zero results are dropped.
  void add(std::size_t r, std::size_t c, const Rational& v);
  Rational at(std::size_t r, std::size_t c) const;

  SparseMatrix transpose() const;
  SparseMatrix scaled(const Rational& s) const;

  // Keeps only the listed columns (mask[c] == true); the rest become zero.
  SparseMatrix restrict_columns(const std::vector<bool>& mask) const;

  SparseMatrix& operator+=(const SparseMatrix& other);
  SparseMatrix& operator-=(const SparseMatrix& other);
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

  // Largest singular value, estimated in double precision by power
  // iteration on M^T M. Exactly 0 iff the matrix is zero.
  double operator_norm() const;

 private:
  std::vector<Row> rows_;
};

}  // namespace afcore
