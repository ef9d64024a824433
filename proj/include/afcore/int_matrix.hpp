#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace afcore {

// Dense row-major integer matrix. Used for adjacency matrices, the Gamma
// machinery of the dimension-group certificate, B-matrices and Weyl group
// elements acting on the root lattice.
class IntMatrix {
 public:
  using value_type = std::int64_t;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, value_type fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<value_type>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  value_type operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const value_type> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<value_type> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  const std::vector<value_type>& data() const noexcept { return data_; }

  IntMatrix transpose() const;
  bool is_zero() const;

  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);
  IntMatrix operator-() const;

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

// m^k for k >= 0 by repeated squaring.
IntMatrix power(const IntMatrix& m, unsigned k);

// Exact determinant by fraction-free (Bareiss) elimination.
std::int64_t determinant(const IntMatrix& m);

}  // namespace afcore
