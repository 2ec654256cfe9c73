// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "swhub/fock.hpp"
#include "swhub/matrix_operator.hpp"
#include "swhub/recursion.hpp"
#include "swhub/swgen.hpp"

namespace swhub::msw {

/// (U / 4t) atan(4t / U); throws for U <= 0 or t == 0.
double theta_analytic(double t, double U);

struct Bracket {
  double lo = 0.0;
  double hi = 1.5;
};

enum class CostKind { EnergyHeisenberg, EnergyIonic, CouplingNorm, Custom };

std::string to_string(CostKind kind);

/// Scalar objective of theta. `slope`, when set, is its derivative and is
/// used to pin smooth minima below the sqrt(epsilon) limit of value-only search.
struct ThetaCost {
  CostKind kind = CostKind::Custom;
  double ionic_alpha = 0.0;
  std::function<double(double)> value;
  std::function<double(double)> slope;
};

struct VariationalResult {
  double theta_star = 0.0;
  CostKind cost_kind = CostKind::Custom;
  double ionic_alpha = 0.0;
  double value = 0.0;
  int n_evals = 0;
  bool at_bracket_edge = false;
  bool degenerate = false;
};

/// Grid scan followed by Brent's golden-section/parabolic search on the best cell.
/// Throws NumericalError on a non-finite cost value.
VariationalResult minimize_theta(const ThetaCost& cost, Bracket bracket = {}, double tol = 1e-10);

enum class TrialKind { Heisenberg, HeisenbergAlias, Ionic };

/// Dimer trial states in a basis containing the half-filled Sz=0 dimer states.
/// Heisenberg: (|1001> - |0110>)/sqrt2; alias uses "+"; Ionic: cos a |1100> + sin a |0011>.
Eigen::VectorXd trial_state(const fock::Basis& basis, TrialKind kind, double alpha = 0.0);

/// exp(theta S) H exp(-theta S) by dense matrix exponential.
MatrixOperator transformed_hamiltonian(const MatrixOperator& s, const MatrixOperator& h,
                                       double theta);

/// exp(-theta S) phi; dense for two sites, Krylov otherwise.
Eigen::VectorXd apply_inverse_transform(const MatrixOperator& s, double theta,
                                        const Eigen::VectorXd& phi);

/// theta -> <phi| exp(theta S) H exp(-theta S) |phi>.
ThetaCost cost_energy(const swgen::LambdaTable& table, const Eigen::VectorXd& trial,
                      const MatrixOperator& h, CostKind kind = CostKind::EnergyHeisenberg,
                      double ionic_alpha = 0.0);

enum class HbarRoute { Exponential, ClosedForm };

/// theta -> ||H_X(theta)||_F relative to the no-double-occupancy projector.
ThetaCost cost_coupling(const swgen::LambdaTable& table, const fock::HubbardSplit& h,
                        HbarRoute route = HbarRoute::Exponential);

/// Least-squares coefficients of a two-site operator on the channel operators.
struct ChannelFit {
  std::array<recursion::ChannelIntegrals, 2> spin{};  // J, L are per spin (half of X coefficient)
  double residual = 0.0;
};

ChannelFit fit_channels(const MatrixOperator& op);

struct IterationStep {
  int s = 0;
  swgen::LambdaTable lambdas;
  MatrixOperator hbar;
  ChannelFit integrals;  // read off hbar - H0
  double coupling_norm = 0.0;
};

struct IterationTrace {
  std::vector<IterationStep> steps;
  bool converged = false;
  bool halted = false;
  std::string halt_reason;
};

/// Standard SW at s = 0 followed by up to max_iter updates; works in the full
/// two-site Fock space. Stops early once the coupling norm is <= tol.
IterationTrace iterate_sw(const fock::HubbardParams& params, int max_iter = 3, double tol = 1e-10);

/// Generator update from the integrals of the current effective Hamiltonian.
/// Returns nullopt when a coupled channel has a vanishing denominator.
std::optional<swgen::LambdaTable> update_lambdas(const fock::HubbardParams& params,
                                                 const ChannelFit& fit, std::string* why = nullptr);

/// Singlet energies of a Hamiltonian, ascending.
std::vector<double> singlet_spectrum(const MatrixOperator& h);

}  // namespace swhub::msw
