#pragma once

#include "afcore/int_matrix.hpp"
#include "afcore/sparse.hpp"

// Hot loops of the library in two flavours. The serial versions are the
// reference implementations; the OpenMP versions are what the library
// calls. Tests check them against each other and bench/ compares timings.
namespace afcore::kernels {

namespace serial {
IntMatrix int_matmul(const IntMatrix& a, const IntMatrix& b);
// Warshall closure of a 0/1 adjacency matrix: entry (i,j) becomes 1 iff a
// walk of positive length leads from i to j.
IntMatrix reachability(const IntMatrix& adjacency);
SparseMatrix sparse_matmul(const SparseMatrix& a, const SparseMatrix& b);
}  // namespace serial

namespace parallel {
IntMatrix int_matmul(const IntMatrix& a, const IntMatrix& b);
IntMatrix reachability(const IntMatrix& adjacency);
SparseMatrix sparse_matmul(const SparseMatrix& a, const SparseMatrix& b);
}  // namespace parallel

}  // namespace afcore::kernels
