// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#include "swhub/qsim/fermion.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace swhub::qsim {

using fock::Spin;
using fock::orbital_index;

FermionOperator FermionOperator::constant(cplx c) {
  FermionOperator op;
  op.add(FermionTerm{c, {}});
  return op;
}

FermionOperator FermionOperator::number(int orbital) { return hopping(orbital, orbital); }

FermionOperator FermionOperator::hopping(int to, int from, cplx coeff) {
  FermionOperator op;
  op.add(FermionTerm{coeff, {Ladder{to, true}, Ladder{from, false}}});
  return op;
}

FermionOperator FermionOperator::operator+(const FermionOperator& o) const {
  FermionOperator out = *this;
  out.terms_.insert(out.terms_.end(), o.terms_.begin(), o.terms_.end());
  return out;
}

FermionOperator FermionOperator::operator-(const FermionOperator& o) const {
  return *this + o * cplx(-1.0);
}

FermionOperator FermionOperator::operator*(const FermionOperator& o) const {
  FermionOperator out;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      FermionTerm t{a.coeff * b.coeff, a.ops};
      t.ops.insert(t.ops.end(), b.ops.begin(), b.ops.end());
      out.terms_.push_back(std::move(t));
    }
  return out;
}

FermionOperator FermionOperator::operator*(cplx s) const {
  FermionOperator out = *this;
  for (auto& t : out.terms_) t.coeff *= s;
  return out;
}

int FermionOperator::max_orbital() const {
  int m = -1;
  for (const auto& t : terms_)
    for (const auto& l : t.ops) m = std::max(m, l.orbital);
  return m;
}

namespace {

PauliSum jw_ladder(const Ladder& l, int n) {
  if (l.orbital < 0 || l.orbital >= n)
    throw std::out_of_range("jordan_wigner: orbital " + std::to_string(l.orbital) +
                            " outside " + std::to_string(n) + " qubits");
  const std::uint64_t below = (1ULL << l.orbital) - 1ULL;
  const std::uint64_t bit = 1ULL << l.orbital;
  PauliSum s(n);
  s.add(PauliString(n, bit, below), 0.5);
  s.add(PauliString(n, bit, below | bit), cplx(0.0, l.dagger ? -0.5 : 0.5));
  return s;
}

}  // namespace

PauliSum jordan_wigner(const FermionOperator& op, int n_qubits) {
  if (n_qubits < 1 || n_qubits > 62) throw std::invalid_argument("jordan_wigner: bad qubit count");
  PauliSum out(n_qubits);
  for (const auto& t : op.terms()) {
    PauliSum prod = PauliSum::identity(n_qubits, t.coeff);
    for (const auto& l : t.ops) prod = prod * jw_ladder(l, n_qubits);
    out = out + prod;
  }
  return out.simplified();
}

FermionHubbard fermion_hubbard(const fock::HubbardParams& params) {
  params.validate();
  FermionHubbard h;
  for (int i = 0; i < params.n_sites; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const auto nu = FermionOperator::number(orbital_index(i, Spin::Up));
    const auto nd = FermionOperator::number(orbital_index(i, Spin::Down));
    h.h0 = h.h0 + (nu + nd) * params.mu[ui] + nu * nd * params.U[ui];
  }
  for (auto [i, j] : params.bonds()) {
    for (Spin s : {Spin::Up, Spin::Down}) {
      const int oi = orbital_index(i, s);
      const int oj = orbital_index(j, s);
      h.v = h.v + FermionOperator::hopping(oi, oj, -params.t(i, j)) +
            FermionOperator::hopping(oj, oi, -params.t(i, j));
    }
  }
  return h;
}

FermionOperator fermion_generator(const swgen::LambdaTable& table) {
  FermionOperator s;
  const auto one = FermionOperator::constant(1.0);
  for (const auto& p : table.pairs()) {
    for (Spin sp : {Spin::Up, Spin::Down}) {
      const Spin o = fock::opposite(sp);
      const auto ni = FermionOperator::number(orbital_index(p.i, o));
      const auto nj = FermionOperator::number(orbital_index(p.j, o));
      const FermionOperator proj[4] = {(one - ni) * (one - nj), ni * (one - nj),
                                       (one - ni) * nj, ni * nj};
      const int oi = orbital_index(p.i, sp);
      const int oj = orbital_index(p.j, sp);
      const auto anti = FermionOperator::hopping(oi, oj) - FermionOperator::hopping(oj, oi);
      for (int x = 0; x < swgen::kChannels; ++x) {
        const double l = p.lambda[static_cast<std::size_t>(sp)][static_cast<std::size_t>(x)];
        if (l != 0.0) s = s + proj[x] * anti * l;
      }
    }
  }
  return s;
}

FermionOperator fermion_spin_squared(int n_sites) {
  FermionOperator sp;
  FermionOperator sm;
  FermionOperator sz;
  for (int i = 0; i < n_sites; ++i) {
    const int u = orbital_index(i, Spin::Up);
    const int d = orbital_index(i, Spin::Down);
    sp = sp + FermionOperator::hopping(u, d);
    sm = sm + FermionOperator::hopping(d, u);
    sz = sz + FermionOperator::number(u) * 0.5 - FermionOperator::number(d) * 0.5;
  }
  return sm * sp + sz * sz + sz;
}

Eigen::MatrixXcd restrict_to(const PauliSum& sum, const fock::Basis& basis) {
  const auto full = sum.to_matrix();
  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      m(r, c) = full(static_cast<Eigen::Index>(basis.state(static_cast<std::size_t>(r)).bits),
                     static_cast<Eigen::Index>(basis.state(static_cast<std::size_t>(c)).bits));
  return m;
}

Eigen::VectorXcd embed_state(const fock::Basis& basis, const Eigen::VectorXd& v) {
  if (v.size() != static_cast<Eigen::Index>(basis.size()))
    throw std::invalid_argument("embed_state: size mismatch");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(Eigen::Index{1} << basis.n_orbitals());
  for (std::size_t i = 0; i < basis.size(); ++i)
    out[static_cast<Eigen::Index>(basis.state(i).bits)] = v[static_cast<Eigen::Index>(i)];
  return out;
}

}  // namespace swhub::qsim
