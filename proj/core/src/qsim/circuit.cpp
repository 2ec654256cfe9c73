// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#include "swhub/qsim/circuit.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace swhub::qsim {

namespace {

std::uint64_t qubit_mask(const Gate& g) {
  switch (g.kind) {
    case GateKind::CNOT: return (1ULL << g.q0) | (1ULL << g.q1);
    case GateKind::PauliExp: return g.pauli.x_mask() | g.pauli.z_mask();
    default: return 1ULL << g.q0;
  }
}

bool inverse_pair(const Gate& a, const Gate& b, double tol) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case GateKind::H:
    case GateKind::X: return a.q0 == b.q0;
    case GateKind::CNOT: return a.q0 == b.q0 && a.q1 == b.q1;
    case GateKind::RY:
    case GateKind::RZ: return a.q0 == b.q0 && std::abs(a.angle + b.angle) <= tol;
    case GateKind::PauliExp: return a.pauli == b.pauli && std::abs(a.angle + b.angle) <= tol;
  }
  return false;
}

}  // namespace

std::string Gate::str() const {
  std::ostringstream os;
  switch (kind) {
    case GateKind::H: os << "H " << q0; break;
    case GateKind::X: os << "X " << q0; break;
    case GateKind::RY: os << "RY(" << angle << ") " << q0; break;
    case GateKind::RZ: os << "RZ(" << angle << ") " << q0; break;
    case GateKind::CNOT: os << "CNOT " << q0 << ' ' << q1; break;
    case GateKind::PauliExp: os << "EXP(i " << angle << ' ' << pauli.str() << ')'; break;
  }
  return os.str();
}

Circuit& Circuit::add(Gate g) {
  auto check = [this](int q) {
    if (q < 0 || q >= n_) throw std::out_of_range("Circuit: qubit index out of range");
  };
  if (!std::isfinite(g.angle)) throw std::invalid_argument("Circuit: angle must be finite");
  if (g.kind == GateKind::PauliExp) {
    if (g.pauli.n_qubits() != n_) throw std::invalid_argument("Circuit: Pauli size mismatch");
  } else {
    check(g.q0);
    if (g.kind == GateKind::CNOT) {
      check(g.q1);
      if (g.q0 == g.q1) throw std::invalid_argument("Circuit: CNOT control equals target");
    }
  }
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::h(int q) { return add(Gate{GateKind::H, q}); }
Circuit& Circuit::x(int q) { return add(Gate{GateKind::X, q}); }
Circuit& Circuit::ry(int q, double a) { return add(Gate{GateKind::RY, q, -1, a}); }
Circuit& Circuit::rz(int q, double a) { return add(Gate{GateKind::RZ, q, -1, a}); }
Circuit& Circuit::cnot(int c, int t) { return add(Gate{GateKind::CNOT, c, t}); }

Circuit& Circuit::pauli_exp(const PauliString& p, double a) {
  add(Gate{GateKind::PauliExp, 0, -1, a, p});
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_ != n_) throw std::invalid_argument("Circuit::append: qubit count mismatch");
  for (const auto& g : other.gates_) gates_.push_back(g);
  return *this;
}

Circuit Circuit::inverse() const {
  Circuit out(n_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    Gate g = *it;
    if (g.kind == GateKind::RY || g.kind == GateKind::RZ || g.kind == GateKind::PauliExp)
      g.angle = -g.angle;
    out.gates_.push_back(std::move(g));
  }
  return out;
}

Circuit trotter_circuit(const PauliSum& sum, double theta, double tol) {
  Circuit c(sum.n_qubits());
  for (const auto& [p, xi] : sum.terms()) {
    if (std::abs(xi.real()) > tol * std::max(1.0, std::abs(xi)))
      throw std::invalid_argument("trotter_circuit: term " + p.str() +
                                  " has a real coefficient; factor is not unitary");
    if (p.is_identity() || xi.imag() == 0.0) continue;
    c.pauli_exp(p, theta * xi.imag());
  }
  return c;
}

Circuit lower_pauli_exp(const PauliString& p, double angle, int n) {
  Circuit c(n);
  std::vector<int> support;
  for (int q = 0; q < n; ++q)
    if (p.letter(q) != 'I') support.push_back(q);
  if (support.empty()) return c;
  for (int q : support) {
    if (p.letter(q) == 'X') c.h(q);
    if (p.letter(q) == 'Y') c.rz(q, -std::numbers::pi / 2).h(q);
  }
  for (std::size_t k = 0; k + 1 < support.size(); ++k) c.cnot(support[k], support[k + 1]);
  c.rz(support.back(), -2.0 * angle);
  for (std::size_t k = support.size() - 1; k > 0; --k) c.cnot(support[k - 1], support[k]);
  for (int q : support) {
    if (p.letter(q) == 'X') c.h(q);
    if (p.letter(q) == 'Y') c.h(q).rz(q, std::numbers::pi / 2);
  }
  return c;
}

Circuit lower(const Circuit& c) {
  Circuit out(c.n_qubits());
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::PauliExp)
      out.append(lower_pauli_exp(g.pauli, g.angle, c.n_qubits()));
    else
      out.add(g);
  }
  return out;
}

Circuit cancel_adjacent_inverses(const Circuit& c, double tol) {
  std::vector<Gate> kept;
  for (const auto& g : c.gates()) {
    const auto mask = qubit_mask(g);
    bool cancelled = false;
    for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
      const auto m = qubit_mask(*it);
      if ((m & mask) == 0) continue;
      if (m == mask && inverse_pair(*it, g, tol)) {
        kept.erase(std::next(it).base());
        cancelled = true;
      }
      break;
    }
    if (!cancelled) kept.push_back(g);
  }
  Circuit out(c.n_qubits());
  for (auto& g : kept) out.add(std::move(g));
  return out;
}

GateCounts count_gates(const Circuit& c) {
  GateCounts n;
  const Circuit lowered = lower(c);
  for (const auto& g : lowered.gates()) {
    if (g.kind == GateKind::CNOT)
      ++n.cnot;
    else
      ++n.one_qubit;
  }
  return n;
}

Circuit prepare_state(StateKind kind, double alpha) {
  Circuit c(4);
  if (kind == StateKind::Heisenberg) {
    // Ends as (|0110> - |1001>)/sqrt2, the target up to a global sign.
    c.x(0).h(0).cnot(0, 3).cnot(0, 1).x(1).cnot(1, 2);
  } else {
    c.ry(0, 2.0 * alpha).x(0).cnot(0, 1).cnot(0, 2).x(2).cnot(2, 3);
  }
  return c;
}

}  // namespace swhub::qsim
