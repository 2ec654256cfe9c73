// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#include "swhub/qsim/simulator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace swhub::qsim {

namespace {

using Index = Eigen::Index;

Index dim_of(int n) { return Index{1} << n; }

/// Left-multiplies the rows of m by the gate unitary.
template <class M>
void apply_rows(const Gate& g, M& m) {
  const Index d = m.rows();
  switch (g.kind) {
    case GateKind::H: {
      const Index bit = Index{1} << g.q0;
      const double r = 1.0 / std::numbers::sqrt2;
      for (Index j = 0; j < d; ++j) {
        if (j & bit) continue;
        auto a = m.row(j).eval();
        auto b = m.row(j | bit).eval();
        m.row(j) = r * (a + b);
        m.row(j | bit) = r * (a - b);
      }
      break;
    }
    case GateKind::X: {
      const Index bit = Index{1} << g.q0;
      for (Index j = 0; j < d; ++j)
        if (!(j & bit)) m.row(j).swap(m.row(j | bit));
      break;
    }
    case GateKind::RY: {
      const Index bit = Index{1} << g.q0;
      const double c = std::cos(g.angle / 2);
      const double s = std::sin(g.angle / 2);
      for (Index j = 0; j < d; ++j) {
        if (j & bit) continue;
        auto a = m.row(j).eval();
        auto b = m.row(j | bit).eval();
        m.row(j) = c * a - s * b;
        m.row(j | bit) = s * a + c * b;
      }
      break;
    }
    case GateKind::RZ: {
      const Index bit = Index{1} << g.q0;
      const cplx p0 = std::polar(1.0, -g.angle / 2);
      const cplx p1 = std::polar(1.0, g.angle / 2);
      for (Index j = 0; j < d; ++j) m.row(j) *= (j & bit) ? p1 : p0;
      break;
    }
    case GateKind::CNOT: {
      const Index cb = Index{1} << g.q0;
      const Index tb = Index{1} << g.q1;
      for (Index j = 0; j < d; ++j)
        if ((j & cb) && !(j & tb)) m.row(j).swap(m.row(j | tb));
      break;
    }
    case GateKind::PauliExp: {
      // exp(i a P) = cos a + i sin a P
      const auto& p = g.pauli;
      M pm = M::Zero(m.rows(), m.cols());
      for (Index j = 0; j < d; ++j)
        pm.row(static_cast<Index>(static_cast<std::uint64_t>(j) ^ p.x_mask())) =
            p.phase(static_cast<std::uint64_t>(j)) * m.row(j);
      m = std::cos(g.angle) * m + cplx(0.0, std::sin(g.angle)) * pm;
      break;
    }
  }
}

/// P m for a Pauli string.
Eigen::MatrixXcd pauli_rows(const PauliString& p, const Eigen::MatrixXcd& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (Index j = 0; j < m.rows(); ++j)
    out.row(static_cast<Index>(static_cast<std::uint64_t>(j) ^ p.x_mask())) =
        p.phase(static_cast<std::uint64_t>(j)) * m.row(j);
  return out;
}

/// P rho P for Hermitian P.
Eigen::MatrixXcd pauli_conjugate(const PauliString& p, const Eigen::MatrixXcd& rho) {
  Eigen::MatrixXcd left = pauli_rows(p, rho);
  Eigen::MatrixXcd adj = left.adjoint();
  return pauli_rows(p, adj).adjoint();
}

}  // namespace

void NoiseModel::validate() const {
  auto ok = [](double l) { return std::isfinite(l) && l >= 0.0 && l <= 1.0; };
  if (!ok(lambda1) || !ok(lambda2))
    throw std::invalid_argument("NoiseModel: depolarizing probabilities must lie in [0, 1]");
  if (shots && *shots < 1) throw std::invalid_argument("NoiseModel: shots must be >= 1");
}

DensityState::DensityState(int n) : n_(n), rho_(Eigen::MatrixXcd::Zero(dim_of(n), dim_of(n))) {
  if (n < 1 || n > 12) throw std::invalid_argument("DensityState: bad qubit count");
  rho_(0, 0) = 1.0;
}

DensityState::DensityState(int n, Eigen::MatrixXcd rho) : n_(n), rho_(std::move(rho)) {
  if (rho_.rows() != dim_of(n) || rho_.cols() != dim_of(n))
    throw std::invalid_argument("DensityState: matrix size mismatch");
}

DensityState DensityState::pure(const Eigen::VectorXcd& psi) {
  const int n = static_cast<int>(std::lround(std::log2(static_cast<double>(psi.size()))));
  return DensityState(n, psi * psi.adjoint());
}

bool DensityState::is_valid(double tol) const {
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(trace() - 1.0) > tol) return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

void apply_gate(const Gate& g, Eigen::VectorXcd& psi) { apply_rows(g, psi); }

void apply_gate(const Gate& g, DensityState& rho) {
  auto& m = rho.matrix();
  apply_rows(g, m);
  Eigen::MatrixXcd adj = m.adjoint();
  apply_rows(g, adj);
  m = adj.adjoint();
}

void depolarize_one(DensityState& rho, int q, double lambda) {
  if (lambda == 0.0) return;
  const int n = rho.n_qubits();
  Eigen::MatrixXcd acc = (1.0 - 0.75 * lambda) * rho.matrix();
  for (char l : {'X', 'Y', 'Z'})
    acc += 0.25 * lambda * pauli_conjugate(PauliString::single(n, q, l), rho.matrix());
  rho.matrix() = std::move(acc);
}

void depolarize_two(DensityState& rho, int a, int b, double lambda) {
  if (lambda == 0.0) return;
  const int n = rho.n_qubits();
  Eigen::MatrixXcd acc = (1.0 - lambda) * rho.matrix();
  const std::uint64_t ba = 1ULL << a;
  const std::uint64_t bb = 1ULL << b;
  // Letter codes 0..3 = I, X, Y, Z as (x, z) bits.
  const bool xs[4] = {false, true, true, false};
  const bool zs[4] = {false, false, true, true};
  for (int la = 0; la < 4; ++la)
    for (int lb = 0; lb < 4; ++lb) {
      if (la == 0 && lb == 0) continue;
      const std::uint64_t x = (xs[la] ? ba : 0) | (xs[lb] ? bb : 0);
      const std::uint64_t z = (zs[la] ? ba : 0) | (zs[lb] ? bb : 0);
      acc += (lambda / 15.0) * pauli_conjugate(PauliString(n, x, z), rho.matrix());
    }
  rho.matrix() = std::move(acc);
}

Eigen::VectorXcd run_statevector(const Circuit& c) {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim_of(c.n_qubits()));
  psi[0] = 1.0;
  return run_statevector(c, std::move(psi));
}

Eigen::VectorXcd run_statevector(const Circuit& c, Eigen::VectorXcd psi) {
  if (psi.size() != dim_of(c.n_qubits()))
    throw std::invalid_argument("run_statevector: state size mismatch");
  for (const auto& g : c.gates()) apply_gate(g, psi);
  return psi;
}

DensityState run_density(const Circuit& c, const NoiseModel& noise) {
  return run_density(c, noise, DensityState(c.n_qubits()));
}

DensityState run_density(const Circuit& c, const NoiseModel& noise, DensityState rho) {
  noise.validate();
  if (rho.n_qubits() != c.n_qubits()) throw std::invalid_argument("run_density: size mismatch");
  const Circuit lowered = lower(c);
  for (const auto& g : lowered.gates()) {
    apply_gate(g, rho);
    if (g.is_two_qubit())
      depolarize_two(rho, g.q0, g.q1, noise.lambda2);
    else
      depolarize_one(rho, g.q0, noise.lambda1);
  }
  return rho;
}

Eigen::MatrixXcd depolarizing_choi(int n, double lambda) {
  if (n != 1 && n != 2) throw std::invalid_argument("depolarizing_choi: one or two qubits");
  const Index d = dim_of(n);
  Eigen::MatrixXcd choi = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(d, d);
      e(i, j) = 1.0;
      DensityState s(n, e);
      if (n == 1)
        depolarize_one(s, 0, lambda);
      else
        depolarize_two(s, 0, 1, lambda);
      choi.block(i * d, j * d, d, d) = s.matrix();
    }
  return choi;
}

}  // namespace swhub::qsim
