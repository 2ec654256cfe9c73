// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "swhub/matrix_operator.hpp"

namespace swhub::fock {

enum class Spin : int { Up = 0, Down = 1 };

constexpr Spin opposite(Spin s) { return s == Spin::Up ? Spin::Down : Spin::Up; }

/// Spin-orbital index: site-major, spin-up first. Orbital o maps to qubit o.
constexpr int orbital_index(int site, Spin s) { return 2 * site + static_cast<int>(s); }

/// Occupation bitstring; bit o is orbital o.
struct FockState {
  std::uint64_t bits = 0;

  bool occupied(int orbital) const { return (bits >> orbital) & 1ULL; }
  bool occupied(int site, Spin s) const { return occupied(orbital_index(site, s)); }
  int count_up() const;
  int count_down() const;
  /// Ket label with qubit 0 first, e.g. "1001".
  std::string ket(int n_orbitals) const;

  friend auto operator<=>(const FockState&, const FockState&) = default;
};

/// Result of applying a fermionic monomial to a basis state.
struct SignedState {
  FockState state;
  int sign = 1;
};

/// c†_o with Jordan-Wigner sign (-1)^{occupied orbitals below o}.
std::optional<SignedState> create(FockState s, int orbital);
/// c_o with the same sign convention.
std::optional<SignedState> annihilate(FockState s, int orbital);
/// c†_to c_from applied to s.
std::optional<SignedState> hop(FockState s, int to, int from);

class Basis {
 public:
  /// Fixed (n_up, n_down) sector; throws SectorError for invalid counts.
  static Basis sector(int n_sites, int n_up, int n_down);
  /// All 2^(2 n_sites) occupation states.
  static Basis full(int n_sites);
  /// Arbitrary subset; states are sorted and deduplicated.
  static Basis from_states(int n_sites, std::vector<FockState> states);

  int n_sites() const { return n_sites_; }
  int n_orbitals() const { return 2 * n_sites_; }
  std::optional<int> n_up() const { return n_up_; }
  std::optional<int> n_down() const { return n_down_; }
  bool is_half_filled() const;

  std::size_t size() const { return states_.size(); }
  const FockState& state(std::size_t i) const { return states_[i]; }
  std::span<const FockState> states() const { return states_; }
  std::optional<std::size_t> find(FockState s) const;
  /// Like find() but throws if the state is absent.
  std::size_t index(FockState s) const;

  bool same_as(const Basis& other) const;

 private:
  Basis(int n_sites, std::optional<int> n_up, std::optional<int> n_down,
        std::vector<FockState> states);

  int n_sites_ = 0;
  std::optional<int> n_up_;
  std::optional<int> n_down_;
  std::vector<FockState> states_;
};

using BasisPtr = std::shared_ptr<const Basis>;

BasisPtr build_basis(int n_sites, int n_up, int n_down);
BasisPtr build_full_basis(int n_sites);

struct HubbardParams {
  int n_sites = 0;
  Eigen::MatrixXd t;  // symmetric, zero diagonal
  std::vector<double> mu;
  std::vector<double> U;
  bool periodic = false;

  static HubbardParams dimer(double t, double mu0, double mu1, double U0, double U1);
  /// Homogeneous dimer with mu = (-delta_mu/2, +delta_mu/2).
  static HubbardParams dimer_gauge(double t, double U, double delta_mu);
  /// Homogeneous ring with nearest-neighbour hopping; N=2 is the open dimer.
  static HubbardParams ring(int n_sites, double t, double U);

  void validate() const;
  /// Pairs i<j with nonzero hopping.
  std::vector<std::pair<int, int>> bonds() const;
};

struct HubbardSplit {
  MatrixOperator h0;
  MatrixOperator v;
  MatrixOperator total() const;
};

HubbardSplit build_hubbard(const HubbardParams& params, BasisPtr basis);

/// Projector onto configurations without doubly occupied sites.
MatrixOperator heisenberg_projector(BasisPtr basis);

struct BlockParts {
  MatrixOperator diagonal;
  MatrixOperator off_diagonal;
};

BlockParts block_split(const MatrixOperator& op, const MatrixOperator& projector);

struct EigenPair {
  double value = 0.0;
  Eigen::VectorXd vector;
};

/// k lowest eigenpairs in ascending order; dense for dim <= kDenseLimit, Lanczos above.
std::vector<EigenPair> exact_eigensolve(const MatrixOperator& op, int k);

MatrixOperator spin_squared(BasisPtr basis);

/// Number operator n_o and its complement as diagonal vectors over the basis.
Eigen::VectorXd occupation_vector(const Basis& basis, int orbital);

}  // namespace swhub::fock
