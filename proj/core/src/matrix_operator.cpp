// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#include "swhub/matrix_operator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swhub/errors.hpp"
#include "swhub/fock.hpp"

namespace swhub {

namespace {

constexpr double kHermitianTol = 1e-12;

double max_abs_entry(const MatrixOperator::Sparse& m) {
  double out = 0.0;
  for (Eigen::Index k = 0; k < m.outerSize(); ++k)
    for (MatrixOperator::Sparse::InnerIterator it(m, k); it; ++it)
      out = std::max(out, std::abs(it.value()));
  return out;
}

}  // namespace

MatrixOperator::MatrixOperator(std::shared_ptr<const fock::Basis> basis, Dense m, bool hermitian)
    : basis_(std::move(basis)), storage_(std::move(m)), hermitian_(hermitian) {
  if (!basis_) throw DimensionError("MatrixOperator: null basis");
  const auto& d = std::get<Dense>(storage_);
  const auto n = static_cast<Eigen::Index>(basis_->size());
  if (d.rows() != n || d.cols() != n)
    throw DimensionError("MatrixOperator: matrix is " + std::to_string(d.rows()) + "x" +
                         std::to_string(d.cols()) + ", basis has " + std::to_string(n) +
                         " states");
  if (hermitian_) {
    const double scale = std::max(1.0, d.cwiseAbs().maxCoeff());
    if (asymmetry() > kHermitianTol * scale)
      throw std::invalid_argument("MatrixOperator: flagged hermitian but asymmetric");
  }
}

MatrixOperator::MatrixOperator(std::shared_ptr<const fock::Basis> basis, Sparse m, bool hermitian)
    : basis_(std::move(basis)), storage_(std::move(m)), hermitian_(hermitian) {
  if (!basis_) throw DimensionError("MatrixOperator: null basis");
  auto& s = std::get<Sparse>(storage_);
  const auto n = static_cast<Eigen::Index>(basis_->size());
  if (s.rows() != n || s.cols() != n)
    throw DimensionError("MatrixOperator: sparse shape does not match basis");
  s.makeCompressed();
  if (hermitian_) {
    const double scale = std::max(1.0, max_abs_entry(s));
    if (asymmetry() > kHermitianTol * scale)
      throw std::invalid_argument("MatrixOperator: flagged hermitian but asymmetric");
  }
}

MatrixOperator MatrixOperator::from_triplets(std::shared_ptr<const fock::Basis> basis,
                                             const std::vector<Triplet>& triplets,
                                             bool hermitian) {
  const auto n = static_cast<Eigen::Index>(basis->size());
  Sparse s(n, n);
  s.setFromTriplets(triplets.begin(), triplets.end());
  s.prune(0.0);
  if (n <= kDenseLimit) return MatrixOperator(std::move(basis), Dense(s), hermitian);
  return MatrixOperator(std::move(basis), std::move(s), hermitian);
}

MatrixOperator MatrixOperator::zero(std::shared_ptr<const fock::Basis> basis) {
  return from_triplets(std::move(basis), {}, true);
}

MatrixOperator MatrixOperator::identity(std::shared_ptr<const fock::Basis> basis) {
  return diagonal(basis, Eigen::VectorXd::Ones(static_cast<Eigen::Index>(basis->size())));
}

MatrixOperator MatrixOperator::diagonal(std::shared_ptr<const fock::Basis> basis,
                                        const Eigen::VectorXd& d) {
  std::vector<Triplet> trips;
  trips.reserve(static_cast<std::size_t>(d.size()));
  for (Eigen::Index i = 0; i < d.size(); ++i)
    if (d[i] != 0.0) trips.emplace_back(i, i, d[i]);
  return from_triplets(std::move(basis), trips, true);
}

Eigen::Index MatrixOperator::dim() const { return static_cast<Eigen::Index>(basis_->size()); }

const MatrixOperator::Dense& MatrixOperator::dense() const {
  if (!is_dense()) throw std::logic_error("MatrixOperator: storage is sparse");
  return std::get<Dense>(storage_);
}

const MatrixOperator::Sparse& MatrixOperator::sparse() const {
  if (is_dense()) throw std::logic_error("MatrixOperator: storage is dense");
  return std::get<Sparse>(storage_);
}

MatrixOperator::Dense MatrixOperator::to_dense() const {
  if (is_dense()) return std::get<Dense>(storage_);
  return Dense(std::get<Sparse>(storage_));
}

MatrixOperator::Sparse MatrixOperator::to_sparse() const {
  if (!is_dense()) return std::get<Sparse>(storage_);
  return std::get<Dense>(storage_).sparseView();
}

Eigen::VectorXd MatrixOperator::apply(const Eigen::VectorXd& v) const {
  if (v.size() != dim()) throw DimensionError("MatrixOperator::apply: vector size mismatch");
  if (is_dense()) return std::get<Dense>(storage_) * v;
  return std::get<Sparse>(storage_) * v;
}

double MatrixOperator::expectation(const Eigen::VectorXd& v) const { return v.dot(apply(v)); }

double MatrixOperator::frobenius_norm() const {
  if (is_dense()) return std::get<Dense>(storage_).norm();
  return std::get<Sparse>(storage_).norm();
}

double MatrixOperator::asymmetry() const {
  if (is_dense()) {
    const auto& d = std::get<Dense>(storage_);
    if (d.size() == 0) return 0.0;
    return (d - d.transpose()).cwiseAbs().maxCoeff();
  }
  const auto& s = std::get<Sparse>(storage_);
  Sparse diff = s - Sparse(s.transpose());
  return max_abs_entry(diff);
}

void MatrixOperator::require_same_basis(const MatrixOperator& o) const {
  if (basis_ != o.basis_ && !basis_->same_as(*o.basis_))
    throw DimensionError("MatrixOperator: operands live in different bases");
}

MatrixOperator MatrixOperator::operator+(const MatrixOperator& o) const {
  require_same_basis(o);
  const bool h = hermitian_ && o.hermitian_;
  if (is_dense() && o.is_dense())
    return MatrixOperator(basis_, Dense(dense() + o.dense()), h);
  return MatrixOperator(basis_, Sparse(to_sparse() + o.to_sparse()), h);
}

MatrixOperator MatrixOperator::operator-(const MatrixOperator& o) const {
  require_same_basis(o);
  const bool h = hermitian_ && o.hermitian_;
  if (is_dense() && o.is_dense())
    return MatrixOperator(basis_, Dense(dense() - o.dense()), h);
  return MatrixOperator(basis_, Sparse(to_sparse() - o.to_sparse()), h);
}

MatrixOperator MatrixOperator::operator*(double s) const {
  if (is_dense()) return MatrixOperator(basis_, Dense(dense() * s), hermitian_);
  return MatrixOperator(basis_, Sparse(sparse() * s), hermitian_);
}

MatrixOperator MatrixOperator::product(const MatrixOperator& o) const {
  require_same_basis(o);
  if (is_dense() && o.is_dense()) return MatrixOperator(basis_, Dense(dense() * o.dense()));
  return MatrixOperator(basis_, Sparse(to_sparse() * o.to_sparse()));
}

MatrixOperator MatrixOperator::transpose() const {
  if (is_dense()) return MatrixOperator(basis_, Dense(dense().transpose()), hermitian_);
  return MatrixOperator(basis_, Sparse(sparse().transpose()), hermitian_);
}

MatrixOperator commutator(const MatrixOperator& a, const MatrixOperator& b) {
  return a.product(b) - b.product(a);
}

double frobenius_distance(const MatrixOperator& a, const MatrixOperator& b) {
  return (a - b).frobenius_norm();
}

}  // namespace swhub
