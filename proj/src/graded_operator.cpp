#include "afcore/graded_operator.hpp"

#include <algorithm>

#include "afcore/error.hpp"

namespace afcore {

GradedOperator::GradedOperator(SparseMatrix block, int degree) : dim_(block.dim()) {
  if (!block.is_zero()) blocks_.emplace(degree, std::move(block));
}

std::optional<int> GradedOperator::degree() const {
  if (blocks_.size() != 1) return std::nullopt;
  return blocks_.begin()->first;
}

SparseMatrix GradedOperator::block(int degree) const {
  auto it = blocks_.find(degree);
  return it == blocks_.end() ? SparseMatrix(dim_) : it->second;
}

GradedOperator GradedOperator::adjoint() const {
  // Entries are real rationals, so the conjugate transpose is the transpose.
  GradedOperator out(dim_);
  for (const auto& [k, m] : blocks_) out.blocks_.emplace(-k, m.transpose());
  return out;
}

GradedOperator GradedOperator::scaled(const Rational& s) const {
  GradedOperator out(dim_);
  if (afcore::is_zero(s)) return out;
  for (const auto& [k, m] : blocks_) out.blocks_.emplace(k, m.scaled(s));
  return out;
}

GradedOperator GradedOperator::restrict_columns(const std::vector<bool>& mask) const {
  GradedOperator out(dim_);
  for (const auto& [k, m] : blocks_) out.blocks_.emplace(k, m.restrict_columns(mask));
  out.prune();
  return out;
}

double GradedOperator::operator_norm() const {
  double norm = 0.0;
  for (const auto& [k, m] : blocks_) norm = std::max(norm, m.operator_norm());
  return norm;
}

void GradedOperator::check_dim(const GradedOperator& other) const {
  if (dim_ != other.dim_) fail(ErrorKind::DimensionMismatch, "operators act on different index spaces");
}

void GradedOperator::prune() {
  std::erase_if(blocks_, [](const auto& kv) { return kv.second.is_zero(); });
}

GradedOperator& GradedOperator::operator+=(const GradedOperator& other) {
  check_dim(other);
  for (const auto& [k, m] : other.blocks_) {
    auto [it, inserted] = blocks_.try_emplace(k, m);
    if (!inserted) it->second += m;
  }
  prune();
  return *this;
}

GradedOperator& GradedOperator::operator-=(const GradedOperator& other) {
  check_dim(other);
  for (const auto& [k, m] : other.blocks_) {
    auto [it, inserted] = blocks_.try_emplace(k, SparseMatrix(dim_));
    it->second -= m;
  }
  prune();
  return *this;
}

GradedOperator operator*(const GradedOperator& a, const GradedOperator& b) {
  a.check_dim(b);
  GradedOperator out(a.dim_);
  for (const auto& [ka, ma] : a.blocks_)
    for (const auto& [kb, mb] : b.blocks_) {
      SparseMatrix prod = ma * mb;
      auto [it, inserted] = out.blocks_.try_emplace(ka + kb, std::move(prod));
      if (!inserted) it->second += prod;
    }
  out.prune();
  return out;
}

GradedOperator power(const GradedOperator& a, unsigned k) {
  GradedOperator result = GradedOperator::identity(a.dim());
  for (unsigned i = 0; i < k; ++i) result = result * a;
  return result;
}

}  // namespace afcore
