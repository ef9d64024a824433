#include "afcore/kernels.hpp"

#include <algorithm>
#include <cstddef>

#include "afcore/error.hpp"

namespace afcore::kernels {

namespace {

void check_product_shape(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
}

void check_square(const IntMatrix& m) {
  if (!m.square()) fail(ErrorKind::DimensionMismatch, "reachability needs a square matrix");
}

// One output row of a sparse product, accumulated into a dense scratch
// buffer and compacted in column order.
void sparse_row_product(const SparseMatrix& a, const SparseMatrix& b, std::size_t r,
                        std::vector<Rational>& scratch, std::vector<SparseMatrix::Index>& touched,
                        SparseMatrix::Row& out) {
  touched.clear();
  for (const auto& [k, av] : a.row(r)) {
    for (const auto& [c, bv] : b.row(k)) {
      if (is_zero(scratch[c])) touched.push_back(c);
      scratch[c] += av * bv;
    }
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  out.clear();
  for (auto c : touched) {
    if (!is_zero(scratch[c])) out.emplace_back(c, scratch[c]);
    scratch[c] = 0;
  }
}

}  // namespace

namespace serial {

IntMatrix int_matmul(const IntMatrix& a, const IntMatrix& b) {
  check_product_shape(a, b);
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix reachability(const IntMatrix& adjacency) {
  check_square(adjacency);
  const std::size_t n = adjacency.rows();
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = adjacency(i, j) != 0 ? 1 : 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!c(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (c(k, j)) c(i, j) = 1;
    }
  return c;
}

SparseMatrix sparse_matmul(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.dim() != b.dim()) fail(ErrorKind::DimensionMismatch, "sparse product dimension mismatch");
  SparseMatrix c(a.dim());
  std::vector<Rational> scratch(b.dim());
  std::vector<SparseMatrix::Index> touched;
  for (std::size_t r = 0; r < a.dim(); ++r) sparse_row_product(a, b, r, scratch, touched, c.row(r));
  return c;
}

}  // namespace serial

namespace parallel {

// Below these sizes a parallel region costs more than it saves.
constexpr std::size_t kMinParallelRows = 64;
constexpr std::size_t kMinParallelClosure = 128;
constexpr std::size_t kMinParallelSparse = 512;

IntMatrix int_matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() < kMinParallelRows) return serial::int_matmul(a, b);
  check_product_shape(a, b);
  IntMatrix c(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix reachability(const IntMatrix& adjacency) {
  if (adjacency.rows() < kMinParallelClosure) return serial::reachability(adjacency);
  check_square(adjacency);
  const auto n = static_cast<std::ptrdiff_t>(adjacency.rows());
  IntMatrix c(adjacency.rows(), adjacency.cols());
  for (std::ptrdiff_t i = 0; i < n; ++i)
    for (std::ptrdiff_t j = 0; j < n; ++j) c(i, j) = adjacency(i, j) != 0 ? 1 : 0;
  // Row k is invariant during pass k, so rows can be updated independently.
  for (std::ptrdiff_t k = 0; k < n; ++k) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      if (!c(i, k)) continue;
      for (std::ptrdiff_t j = 0; j < n; ++j)
        if (c(k, j)) c(i, j) = 1;
    }
  }
  return c;
}

SparseMatrix sparse_matmul(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.dim() < kMinParallelSparse) return serial::sparse_matmul(a, b);
  if (a.dim() != b.dim()) fail(ErrorKind::DimensionMismatch, "sparse product dimension mismatch");
  SparseMatrix c(a.dim());
  const auto dim = static_cast<std::ptrdiff_t>(a.dim());
#pragma omp parallel
  {
    std::vector<Rational> scratch(b.dim());
    std::vector<SparseMatrix::Index> touched;
#pragma omp for schedule(dynamic, 64)
    for (std::ptrdiff_t r = 0; r < dim; ++r)
      sparse_row_product(a, b, static_cast<std::size_t>(r), scratch, touched, c.row(r));
  }
  return c;
}

}  // namespace parallel

}  // namespace afcore::kernels
