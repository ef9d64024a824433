#include "afcore/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "afcore/error.hpp"
#include "afcore/kernels.hpp"

namespace afcore {

namespace {

SparseMatrix::Row merge_rows(const SparseMatrix::Row& a, const SparseMatrix::Row& b, int sign) {
  SparseMatrix::Row out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : -b[j].second);
      ++j;
    } else {
      Rational v = sign > 0 ? a[i].second + b[j].second : a[i].second - b[j].second;
      if (!afcore::is_zero(v)) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseMatrix SparseMatrix::identity(std::size_t dim) {
  SparseMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.rows_[i].emplace_back(static_cast<Index>(i), Rational(1));
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  return std::accumulate(rows_.begin(), rows_.end(), std::size_t{0},
                         [](std::size_t acc, const Row& r) { return acc + r.size(); });
}

bool SparseMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= dim() || c >= dim()) fail(ErrorKind::IndexOutOfRange, "sparse entry out of range");
  if (afcore::is_zero(v)) return;
  auto& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), static_cast<Index>(c),
                             [](const Entry& e, Index col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (afcore::is_zero(it->second)) row.erase(it);
  } else {
    row.insert(it, Entry{static_cast<Index>(c), v});
  }
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), static_cast<Index>(c),
                             [](const Entry& e, Index col) { return e.first < col; });
  return (it != row.end() && it->first == c) ? it->second : Rational(0);
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(dim());
  for (std::size_t r = 0; r < dim(); ++r)
    for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace_back(static_cast<Index>(r), v);
  return t;
}

SparseMatrix SparseMatrix::scaled(const Rational& s) const {
  if (afcore::is_zero(s)) return SparseMatrix(dim());
  SparseMatrix m = *this;
  for (auto& row : m.rows_)
    for (auto& e : row) e.second *= s;
  return m;
}

SparseMatrix SparseMatrix::restrict_columns(const std::vector<bool>& mask) const {
  if (mask.size() != dim()) fail(ErrorKind::DimensionMismatch, "column mask size mismatch");
  SparseMatrix m(dim());
  for (std::size_t r = 0; r < dim(); ++r)
    for (const auto& e : rows_[r])
      if (mask[e.first]) m.rows_[r].push_back(e);
  return m;
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& other) {
  if (dim() != other.dim()) fail(ErrorKind::DimensionMismatch, "sparse sum dimension mismatch");
  for (std::size_t r = 0; r < dim(); ++r) rows_[r] = merge_rows(rows_[r], other.rows_[r], +1);
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& other) {
  if (dim() != other.dim()) fail(ErrorKind::DimensionMismatch, "sparse difference dimension mismatch");
  for (std::size_t r = 0; r < dim(); ++r) rows_[r] = merge_rows(rows_[r], other.rows_[r], -1);
  return *this;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  return kernels::parallel::sparse_matmul(a, b);
}

double SparseMatrix::operator_norm() const {
  if (is_zero()) return 0.0;
  const std::size_t n = dim();
  std::vector<double> x(n), y(n), z(n);
  // Deterministic start vector with no special alignment to the basis.
  for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + 0.001 * static_cast<double>(i % 97);
  auto normalize = [](std::vector<double>& v) {
    double s = 0;
    for (double e : v) s += e * e;
    s = std::sqrt(s);
    if (s > 0)
      for (double& e : v) e /= s;
    return s;
  };
  normalize(x);
  double sigma = 0.0;
  for (int iter = 0; iter < 300; ++iter) {
    std::fill(y.begin(), y.end(), 0.0);
    for (std::size_t r = 0; r < n; ++r)
      for (const auto& [c, v] : rows_[r]) y[r] += boost::rational_cast<double>(v) * x[c];
    std::fill(z.begin(), z.end(), 0.0);
    for (std::size_t r = 0; r < n; ++r)
      for (const auto& [c, v] : rows_[r]) z[c] += boost::rational_cast<double>(v) * y[r];
    const double lambda = normalize(z);
    const double next = std::sqrt(lambda);
    x.swap(z);
    if (lambda == 0.0) break;
    if (std::abs(next - sigma) <= 1e-14 * next) {
      sigma = next;
      break;
    }
    sigma = next;
  }
  if (sigma == 0.0) {
    // Start vector happened to lie in the kernel; fall back to the largest row norm.
    for (const auto& row : rows_) {
      double s = 0;
      for (const auto& e : row) s += boost::rational_cast<double>(e.second * e.second);
      sigma = std::max(sigma, std::sqrt(s));
    }
  }
  return sigma;
}

}  // namespace afcore
