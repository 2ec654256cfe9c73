// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>
#include <numbers>
#include <vector>

#include "swhub/fock.hpp"
#include "swhub/msw.hpp"
#include "swhub/qsim/circuit.hpp"
#include "swhub/qsim/estimator.hpp"
#include "swhub/qsim/pauli.hpp"
#include "swhub/qsim/simulator.hpp"
#include "swhub/swgen.hpp"

namespace swhub::qsim {

/// Qubit operators of a dimer problem.
struct DimerQubitModel {
  fock::HubbardParams params;
  swgen::LambdaTable lambdas;
  PauliSum hamiltonian;
  PauliSum generator;
  PauliSum spin_squared;

  explicit DimerQubitModel(const fock::HubbardParams& params);
  DimerQubitModel(const fock::HubbardParams& params, const swgen::LambdaTable& lambdas);
};

/// Preparation followed by the Trotterized exp(-theta S).
Circuit variational_circuit(const PauliSum& generator, StateKind kind, double alpha, double theta);

/// Preparation followed by exp(-S^(N)) ... exp(-S^(0)), each Trotterized.
Circuit iterative_circuit(const std::vector<PauliSum>& generators, StateKind kind, double alpha);

enum class Optimizer { Brent, Spsa };

struct VqeConfig {
  fock::HubbardParams params = fock::HubbardParams::dimer_gauge(1.0, 4.0, 0.0);
  StateKind optimize_on = StateKind::Heisenberg;
  double ionic_alpha = -std::numbers::pi / 4;  // evaluation angle of the ionic state
  NoiseModel noise{};
  Optimizer optimizer = Optimizer::Spsa;
  SpsaOptions spsa{};
  double theta0 = 1.0;
  msw::Bracket bracket{0.0, 1.5};
  int repetitions = 100;
};

struct Estimate {
  double mean = 0.0;
  double stderr_ = 0.0;
};

struct VqeResult {
  double theta_star = 0.0;
  std::vector<double> theta_trace;  // SPSA iterates (empty for Brent)
  Estimate e_heis;
  Estimate e_ionic;
  double s2_heis = 0.0;
  double s2_ionic = 0.0;
  double purity_heis = 1.0;
  double e0_exact = 0.0;
  double e1_exact = 0.0;
  double rel_error_heis = 0.0;   // |E - E0| / |E0|
  double rel_error_ionic = 0.0;  // |E - E1| / |E1|
  GateCounts counts_raw;
  GateCounts counts_optimized;
};

VqeResult vqe_dimer(const VqeConfig& config);

/// Noiseless exact energies of the Trotterized iterative circuits.
struct TrotterEnergies {
  double e_heis = 0.0;
  double e_ionic = 0.0;
};

TrotterEnergies iterative_trotter_energies(const msw::IterationTrace& trace,
                                           const fock::HubbardParams& params,
                                           double ionic_alpha);

}  // namespace swhub::qsim
