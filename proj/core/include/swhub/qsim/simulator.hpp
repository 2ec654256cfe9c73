// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "swhub/qsim/circuit.hpp"
#include "swhub/qsim/pauli.hpp"

namespace swhub::qsim {

struct NoiseModel {
  double lambda1 = 0.0;  // one-qubit depolarizing probability
  double lambda2 = 0.0;  // two-qubit depolarizing probability
  std::optional<int> shots;  // nullopt = exact expectation
  std::uint64_t seed = 0;

  static NoiseModel noiseless() { return {}; }
  void validate() const;
};

class DensityState {
 public:
  explicit DensityState(int n_qubits);  // |0..0><0..0|
  DensityState(int n_qubits, Eigen::MatrixXcd rho);
  static DensityState pure(const Eigen::VectorXcd& psi);

  int n_qubits() const { return n_; }
  const Eigen::MatrixXcd& matrix() const { return rho_; }
  Eigen::MatrixXcd& matrix() { return rho_; }

  double trace() const { return rho_.trace().real(); }
  double purity() const { return (rho_ * rho_).trace().real(); }
  /// Hermitian, unit trace within tol and eigenvalues >= -tol.
  bool is_valid(double tol = 1e-10) const;

 private:
  int n_;
  Eigen::MatrixXcd rho_;
};

void apply_gate(const Gate& g, Eigen::VectorXcd& psi);
void apply_gate(const Gate& g, DensityState& rho);

/// rho -> (1 - 3l/4) rho + l/4 (X rho X + Y rho Y + Z rho Z).
void depolarize_one(DensityState& rho, int q, double lambda);
/// rho -> (1 - l) rho + l/15 sum over the 15 non-identity Paulis on (a, b).
void depolarize_two(DensityState& rho, int a, int b, double lambda);

/// Statevector from |0..0>.
Eigen::VectorXcd run_statevector(const Circuit& c);
Eigen::VectorXcd run_statevector(const Circuit& c, Eigen::VectorXcd psi);

/// Lowers PauliExp blocks, then applies every gate followed by its noise channel.
DensityState run_density(const Circuit& c, const NoiseModel& noise);
DensityState run_density(const Circuit& c, const NoiseModel& noise, DensityState rho);

/// Choi matrix of the one- or two-qubit depolarizing channel (unnormalized).
Eigen::MatrixXcd depolarizing_choi(int n_qubits, double lambda);

}  // namespace swhub::qsim
