// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstddef>
#include <memory>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace swhub {

namespace fock {
class Basis;
}

/// Dimension above which operators are stored sparse and diagonalized by Lanczos.
inline constexpr Eigen::Index kDenseLimit = 4096;

/// Real operator on a fixed Fock basis. All fermionic operators used here are
/// real in the occupation basis, so "hermitian" means symmetric.
class MatrixOperator {
 public:
  using Dense = Eigen::MatrixXd;
  using Sparse = Eigen::SparseMatrix<double, Eigen::RowMajor>;
  using Triplet = Eigen::Triplet<double>;

  MatrixOperator(std::shared_ptr<const fock::Basis> basis, Dense m, bool hermitian = false);
  MatrixOperator(std::shared_ptr<const fock::Basis> basis, Sparse m, bool hermitian = false);

  /// Duplicate triplets are summed; storage chosen by dimension.
  static MatrixOperator from_triplets(std::shared_ptr<const fock::Basis> basis,
                                      const std::vector<Triplet>& triplets, bool hermitian);
  static MatrixOperator zero(std::shared_ptr<const fock::Basis> basis);
  static MatrixOperator identity(std::shared_ptr<const fock::Basis> basis);
  static MatrixOperator diagonal(std::shared_ptr<const fock::Basis> basis,
                                 const Eigen::VectorXd& d);

  const fock::Basis& basis() const { return *basis_; }
  const std::shared_ptr<const fock::Basis>& basis_ptr() const { return basis_; }
  Eigen::Index dim() const;
  bool is_dense() const { return std::holds_alternative<Dense>(storage_); }
  bool hermitian() const { return hermitian_; }

  const Dense& dense() const;
  const Sparse& sparse() const;
  Dense to_dense() const;
  Sparse to_sparse() const;

  Eigen::VectorXd apply(const Eigen::VectorXd& v) const;
  double expectation(const Eigen::VectorXd& v) const;
  double frobenius_norm() const;
  /// Largest |M_ij - M_ji|.
  double asymmetry() const;

  MatrixOperator operator+(const MatrixOperator& o) const;
  MatrixOperator operator-(const MatrixOperator& o) const;
  MatrixOperator operator*(double s) const;
  /// Matrix product this * o.
  MatrixOperator product(const MatrixOperator& o) const;
  MatrixOperator transpose() const;

 private:
  void require_same_basis(const MatrixOperator& o) const;

  std::shared_ptr<const fock::Basis> basis_;
  std::variant<Dense, Sparse> storage_;
  bool hermitian_ = false;
};

inline MatrixOperator operator*(double s, const MatrixOperator& m) { return m * s; }

/// [a, b] = ab - ba.
MatrixOperator commutator(const MatrixOperator& a, const MatrixOperator& b);

/// Frobenius distance between two operators on the same basis.
double frobenius_distance(const MatrixOperator& a, const MatrixOperator& b);

}  // namespace swhub
