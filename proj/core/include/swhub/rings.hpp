// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "swhub/fock.hpp"
#include "swhub/msw.hpp"
#include "swhub/swgen.hpp"

namespace swhub::rings {

inline constexpr int kMaxSites = 10;

enum class ThetaMode { Fixed1, Optimized };

std::string to_string(ThetaMode mode);

struct SweepPoint {
  int n_sites = 0;
  double u_over_t = 0.0;
  ThetaMode theta_mode = ThetaMode::Optimized;
  double theta = 1.0;
  double e_theta = 0.0;
  double e_exact = 0.0;
  double rel_error_pct = 0.0;
  msw::Bracket bracket{0.0, 1.2};
};

struct HeisenbergGround {
  fock::BasisPtr basis;  // half-filled Sz=0 fermionic sector
  Eigen::VectorXd state;  // embedded, normalized
  double energy = 0.0;    // of sum_<ij> s_i . s_j (J = 1)
};

/// Ground state of the periodic spin-1/2 Heisenberg ring in the Sz=0 sector,
/// embedded as singly occupied fermionic configurations.
HeisenbergGround heisenberg_ground(int n_sites);

/// exp(-theta S) state with an adaptive Krylov subspace.
Eigen::VectorXd apply_generator_exp(const swgen::LambdaTable& table, double theta,
                                    const Eigen::VectorXd& state, fock::BasisPtr basis);

/// Caches the Hamiltonian, generator, trial state and exact energy of one (N, U/t) point.
class RingProblem {
 public:
  RingProblem(int n_sites, double u_over_t, double t = 1.0);

  int n_sites() const { return n_sites_; }
  double u_over_t() const { return u_over_t_; }
  double exact_energy() const { return e_exact_; }
  double energy(double theta) const;
  SweepPoint evaluate(ThetaMode mode, msw::Bracket bracket = {0.0, 1.2}) const;
  const msw::ThetaCost& cost() const { return cost_; }

 private:
  int n_sites_;
  double u_over_t_;
  double e_exact_ = 0.0;
  msw::ThetaCost cost_;
};

SweepPoint ring_relative_error(int n_sites, double u_over_t, ThetaMode mode);

struct SweepFailure {
  int n_sites = 0;
  double u_over_t = 0.0;
  std::string message;
};

struct SweepResult {
  std::vector<SweepPoint> rows;
  std::vector<SweepFailure> failures;
};

/// Cartesian grid in (N, U/t) order; one row per requested mode.
SweepResult sweep(const std::vector<int>& n_list, const std::vector<double>& u_list,
                  const std::vector<ThetaMode>& modes = {ThetaMode::Optimized});

}  // namespace swhub::rings
