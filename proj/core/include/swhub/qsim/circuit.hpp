// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#pragma once

#include <string>
#include <vector>

#include "swhub/qsim/pauli.hpp"

namespace swhub::qsim {

enum class GateKind { H, X, RY, RZ, CNOT, PauliExp };

/// RY(a) = exp(-i a Y/2), RZ(a) = exp(-i a Z/2), PauliExp(P, a) = exp(i a P).
struct Gate {
  GateKind kind = GateKind::H;
  int q0 = 0;  // target, or control for CNOT
  int q1 = -1;  // CNOT target
  double angle = 0.0;
  PauliString pauli{};

  bool is_two_qubit() const { return kind == GateKind::CNOT; }
  std::string str() const;
};

class Circuit {
 public:
  explicit Circuit(int n_qubits = 0) : n_(n_qubits) {}

  int n_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  Circuit& h(int q);
  Circuit& x(int q);
  Circuit& ry(int q, double angle);
  Circuit& rz(int q, double angle);
  Circuit& cnot(int control, int target);
  Circuit& pauli_exp(const PauliString& p, double angle);
  /// Validates qubit indices and angle.
  Circuit& add(Gate g);
  Circuit& append(const Circuit& other);
  /// Reversed gate order with negated angles.
  Circuit inverse() const;

 private:
  int n_ = 0;
  std::vector<Gate> gates_;
};

/// Product of exp(theta xi_k P_k) over the terms in lexicographic order (first term
/// acts first). Coefficients must be imaginary; the identity term is a global phase
/// and is dropped.
Circuit trotter_circuit(const PauliSum& anti_hermitian, double theta, double tol = 1e-12);

/// Basis change, ascending CNOT ladder, RZ on the last support qubit, unladder.
Circuit lower_pauli_exp(const PauliString& p, double angle, int n_qubits);

/// Replaces every PauliExp block by primitive gates.
Circuit lower(const Circuit& c);

/// Drops pairs of mutually inverse gates that are adjacent on their qubits.
Circuit cancel_adjacent_inverses(const Circuit& c, double tol = 1e-12);

struct GateCounts {
  int one_qubit = 0;
  int cnot = 0;
};

/// Counts after lowering.
GateCounts count_gates(const Circuit& c);

enum class StateKind { Heisenberg, Ionic };

/// Four-qubit preparation of (|1001> - |0110>)/sqrt2 or cos a |1100> + sin a |0011>.
Circuit prepare_state(StateKind kind, double alpha = 0.0);

}  // namespace swhub::qsim
