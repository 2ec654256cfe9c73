// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Dense>

namespace swhub::qsim {

using cplx = std::complex<double>;

/// Tensor product of single-qubit Paulis stored as x/z bit masks (Y = x and z).
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n_qubits) : n_(n_qubits) {}
  PauliString(int n_qubits, std::uint64_t x, std::uint64_t z);

  /// Letters for qubit 0, 1, ...; e.g. "XZYZ".
  static PauliString parse(std::string_view letters);
  static PauliString single(int n_qubits, int qubit, char letter);

  int n_qubits() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  char letter(int qubit) const;
  int weight() const;
  bool is_identity() const { return x_ == 0 && z_ == 0; }
  std::string str() const;

  /// P|j> = phase(j) |j ^ x_mask()>.
  cplx phase(std::uint64_t j) const;
  bool commutes_with(const PauliString& o) const;

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.n_ == b.n_ && a.x_ == b.x_ && a.z_ == b.z_;
  }
  /// Lexicographic on letters, qubit 0 first.
  friend bool operator<(const PauliString& a, const PauliString& b);

 private:
  int n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// a * b = phase * P.
std::pair<cplx, PauliString> multiply(const PauliString& a, const PauliString& b);

class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(int n_qubits) : n_(n_qubits) {}

  static PauliSum identity(int n_qubits, cplx coeff = 1.0);

  int n_qubits() const { return n_; }
  const std::map<PauliString, cplx>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add(const PauliString& p, cplx coeff);
  /// Drops terms with |coeff| <= tol.
  PauliSum simplified(double tol = 1e-14) const;

  PauliSum operator+(const PauliSum& o) const;
  PauliSum operator-(const PauliSum& o) const;
  PauliSum operator*(const PauliSum& o) const;
  PauliSum operator*(cplx s) const;

  Eigen::MatrixXcd to_matrix() const;
  Eigen::VectorXcd apply(const Eigen::VectorXcd& psi) const;
  bool all_commute() const;

 private:
  int n_ = 0;
  std::map<PauliString, cplx> terms_;
};

/// Coefficient of a single string (0 if absent).
cplx coefficient(const PauliSum& s, const PauliString& p);

}  // namespace swhub::qsim
