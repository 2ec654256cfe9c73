// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

// Brute-force references built from scratch: Kronecker products, closed forms
// and literal tables. Nothing here calls into the library.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace oracle {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;

inline CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline CMat pauli(char l) {
  CMat m(2, 2);
  switch (l) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1; break;
  }
  return m;
}

/// Operator on n qubits; index bit q is qubit q, so qubit 0 is the rightmost factor.
inline CMat on_qubits(int n, const std::vector<std::pair<int, CMat>>& factors) {
  CMat out = CMat::Identity(1, 1);
  for (int q = n - 1; q >= 0; --q) {
    CMat f = CMat::Identity(2, 2);
    for (const auto& [qq, m] : factors)
      if (qq == q) f = m;
    out = kron(out, f);
  }
  return out;
}

/// Pauli string with letters for qubit 0, 1, ...
inline CMat pauli_string(const std::string& letters) {
  const int n = static_cast<int>(letters.size());
  std::vector<std::pair<int, CMat>> f;
  for (int q = 0; q < n; ++q) f.emplace_back(q, pauli(letters[static_cast<std::size_t>(q)]));
  return on_qubits(n, f);
}

/// Annihilator of orbital o with a Z string on lower orbitals.
inline CMat annihilator(int n, int o) {
  CMat lower(2, 2);
  lower << 0, 1, 0, 0;  // |0><1|
  std::vector<std::pair<int, CMat>> f;
  for (int q = 0; q < o; ++q) f.emplace_back(q, pauli('Z'));
  f.emplace_back(o, lower);
  return on_qubits(n, f);
}

inline CMat number(int n, int o) {
  const CMat c = annihilator(n, o);
  return c.adjoint() * c;
}

/// Site-major spin-orbital, spin-up first.
inline int orb(int site, int spin) { return 2 * site + spin; }

/// Hubbard Hamiltonian on 2 n_sites qubits:
/// sum mu_i n_is + U_i n_iu n_id - sum_{i<j,s} t_ij (c+_is c_js + h.c.).
inline CMat hubbard(const RMat& t, const std::vector<double>& mu, const std::vector<double>& u) {
  const int ns = static_cast<int>(mu.size());
  const int n = 2 * ns;
  CMat h = CMat::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (int i = 0; i < ns; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    h += mu[ui] * (number(n, orb(i, 0)) + number(n, orb(i, 1)));
    h += u[ui] * number(n, orb(i, 0)) * number(n, orb(i, 1));
    for (int j = i + 1; j < ns; ++j)
      for (int s = 0; s < 2; ++s) {
        const CMat ci = annihilator(n, orb(i, s));
        const CMat cj = annihilator(n, orb(j, s));
        h -= t(i, j) * (ci.adjoint() * cj + cj.adjoint() * ci);
      }
  }
  return h;
}

/// Rows/columns of m selected by occupation bitstrings.
inline CMat restrict(const CMat& m, const std::vector<std::uint64_t>& states) {
  const auto d = static_cast<Eigen::Index>(states.size());
  CMat out(d, d);
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b)
      out(a, b) = m(static_cast<Eigen::Index>(states[static_cast<std::size_t>(a)]),
                    static_cast<Eigen::Index>(states[static_cast<std::size_t>(b)]));
  return out;
}

/// Bitstrings of n_sites sites with the given up/down counts, ascending.
inline std::vector<std::uint64_t> sector_states(int n_sites, int n_up, int n_down) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t b = 0; b < (1ULL << (2 * n_sites)); ++b) {
    int up = 0;
    int dn = 0;
    for (int i = 0; i < n_sites; ++i) {
      up += static_cast<int>((b >> (2 * i)) & 1U);
      dn += static_cast<int>((b >> (2 * i + 1)) & 1U);
    }
    if (up == n_up && dn == n_down) out.push_back(b);
  }
  return out;
}

inline double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Singlet energies of the homogeneous dimer at half filling, ascending.
inline std::array<double, 3> dimer_singlets(double t, double u) {
  const double r = std::sqrt(u * u / 4.0 + 4.0 * t * t);
  return {u / 2.0 - r, u, u / 2.0 + r};
}

/// [S, [S, ... [S, V]]] by dense products.
inline std::vector<RMat> nested(const RMat& s, const RMat& v, int n_max) {
  std::vector<RMat> out{v};
  for (int n = 1; n <= n_max; ++n) out.push_back(s * out.back() - out.back() * s);
  return out;
}

/// exp(a) for real antisymmetric a through the eigenbasis of the hermitian i a.
inline RMat expm_antisymmetric(const RMat& a) {
  const CMat h = cplx(0, 1) * a.cast<cplx>();
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  const Eigen::VectorXcd ph =
      (-cplx(0, 1) * es.eigenvalues().cast<cplx>()).array().exp().matrix();
  return (es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint()).real();
}

/// exp(i a) for a hermitian complex matrix.
inline CMat expi_hermitian(const CMat& a) {
  Eigen::SelfAdjointEigenSolver<CMat> es(a);
  const Eigen::VectorXcd ph = (cplx(0, 1) * es.eigenvalues().cast<cplx>()).array().exp().matrix();
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

inline Eigen::VectorXd sorted_eigenvalues(const RMat& m) {
  Eigen::SelfAdjointEigenSolver<RMat> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

/// B_0, B_2, ..., B_20 with B_1 = -1/2 convention (even ones are convention free).
inline std::vector<double> bernoulli_even_table() {
  return {1.0,          1.0 / 6.0,        -1.0 / 30.0,      1.0 / 42.0,
          -1.0 / 30.0,  5.0 / 66.0,       -691.0 / 2730.0,  7.0 / 6.0,
          -3617.0 / 510.0, 43867.0 / 798.0, -174611.0 / 330.0};
}

/// J sum over periodic bonds of s_i . s_j on n spins (2^n dense).
inline CMat heisenberg_ring(int n) {
  const auto d = Eigen::Index{1} << n;
  CMat h = CMat::Zero(d, d);
  const int bonds = n == 2 ? 1 : n;
  for (int b = 0; b < bonds; ++b) {
    const int i = b;
    const int j = (b + 1) % n;
    for (char l : {'X', 'Y', 'Z'}) h += 0.25 * on_qubits(n, {{i, pauli(l)}, {j, pauli(l)}});
  }
  return h;
}

/// Dimer parameter set drawn from the acceptance ranges, kept away from resonances.
struct DimerDraw {
  double mu0 = 0.0;
  double mu1 = 0.0;
  double u0 = 0.0;
  double u1 = 0.0;
};

/// Every energy denominator of the standard generator, by hand: for a hop of
/// spin s from j to i the energy change depends on the spectator occupancy.
inline std::vector<double> dimer_denominators(const DimerDraw& d) {
  const double dmu = d.mu0 - d.mu1;
  return {dmu, dmu + d.u0, dmu - d.u1, dmu + d.u0 - d.u1,
          -dmu, -dmu + d.u1, -dmu - d.u0, -dmu + d.u1 - d.u0};
}

inline std::vector<DimerDraw> random_dimers(int count, std::uint64_t seed, double min_den = 0.5) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dmu(-3.0, 3.0);
  std::uniform_real_distribution<double> u(0.5, 20.0);
  std::vector<DimerDraw> out;
  while (static_cast<int>(out.size()) < count) {
    const double delta = dmu(rng);
    DimerDraw d{delta / 2.0, -delta / 2.0, u(rng), u(rng)};
    bool ok = true;
    for (double x : dimer_denominators(d)) ok = ok && std::abs(x) >= min_den;
    if (ok) out.push_back(d);
  }
  return out;
}

}  // namespace oracle
