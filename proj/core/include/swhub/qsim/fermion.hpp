// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#pragma once

#include <complex>
#include <vector>

#include "swhub/fock.hpp"
#include "swhub/qsim/pauli.hpp"
#include "swhub/swgen.hpp"

namespace swhub::qsim {

struct Ladder {
  int orbital = 0;
  bool dagger = false;
};

/// coeff * op[0] op[1] ... (leftmost acts last).
struct FermionTerm {
  cplx coeff = 1.0;
  std::vector<Ladder> ops;
};

class FermionOperator {
 public:
  FermionOperator() = default;

  static FermionOperator constant(cplx c);
  static FermionOperator number(int orbital);
  /// c+_to c_from.
  static FermionOperator hopping(int to, int from, cplx coeff = 1.0);

  const std::vector<FermionTerm>& terms() const { return terms_; }
  void add(FermionTerm term) { terms_.push_back(std::move(term)); }

  FermionOperator operator+(const FermionOperator& o) const;
  FermionOperator operator-(const FermionOperator& o) const;
  FermionOperator operator*(const FermionOperator& o) const;
  FermionOperator operator*(cplx s) const;

  int max_orbital() const;

 private:
  std::vector<FermionTerm> terms_;
};

/// c+_o = Z_0..Z_{o-1} (X_o - i Y_o)/2. Throws std::out_of_range for orbitals >= n_qubits.
PauliSum jordan_wigner(const FermionOperator& op, int n_qubits);

/// H0 (chemical potential + Hubbard U) and V (hopping) as fermionic operators.
struct FermionHubbard {
  FermionOperator h0;
  FermionOperator v;
  FermionOperator total() const { return h0 + v; }
};

FermionHubbard fermion_hubbard(const fock::HubbardParams& params);
FermionOperator fermion_generator(const swgen::LambdaTable& table);
FermionOperator fermion_spin_squared(int n_sites);

/// Dense matrix of a Pauli sum restricted to the basis states (qubit o = orbital o).
Eigen::MatrixXcd restrict_to(const PauliSum& sum, const fock::Basis& basis);

/// Fock-basis vector embedded into the 2^n statevector.
Eigen::VectorXcd embed_state(const fock::Basis& basis, const Eigen::VectorXd& v);

}  // namespace swhub::qsim
