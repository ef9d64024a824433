#pragma once

#include <map>
#include <optional>
#include <vector>

#include "afcore/sparse.hpp"

namespace afcore {

// Operator on a truncated index space tensored with a formal power z^k of
// the circle coordinate. Blocks are keyed by the gauge degree k; zero
// blocks are never stored.
class GradedOperator {
 public:
  GradedOperator() = default;
  explicit GradedOperator(std::size_t dim) : dim_(dim) {}
  GradedOperator(SparseMatrix block, int degree);

  static GradedOperator identity(std::size_t dim) { return {SparseMatrix::identity(dim), 0}; }

  std::size_t dim() const noexcept { return dim_; }
  const std::map<int, SparseMatrix>& blocks() const noexcept { return blocks_; }
  bool is_zero() const noexcept { return blocks_.empty(); }
  // Set iff exactly one block is non-zero.
  std::optional<int> degree() const;
  // The block of the given degree, zero if absent.
  SparseMatrix block(int degree) const;

  GradedOperator adjoint() const;
  GradedOperator scaled(const Rational& s) const;
  GradedOperator restrict_columns(const std::vector<bool>& mask) const;
  // Largest operator norm over the blocks; 0 for the zero operator.
  double operator_norm() const;

  GradedOperator& operator+=(const GradedOperator& other);
  GradedOperator& operator-=(const GradedOperator& other);
  friend GradedOperator operator+(GradedOperator a, const GradedOperator& b) { return a += b; }
  friend GradedOperator operator-(GradedOperator a, const GradedOperator& b) { return a -= b; }
  friend GradedOperator operator*(const GradedOperator& a, const GradedOperator& b);
  friend bool operator==(const GradedOperator&, const GradedOperator&) = default;

 private:
  void check_dim(const GradedOperator& other) const;
  void prune();

  std::size_t dim_ = 0;
  std::map<int, SparseMatrix> blocks_;
};

// a^k for k >= 0.
GradedOperator power(const GradedOperator& a, unsigned k);

}  // namespace afcore
