// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#include "swhub/qsim/vqe.hpp"

#include <cmath>
#include <stdexcept>

#include "swhub/qsim/fermion.hpp"

namespace swhub::qsim {

namespace {

constexpr int kQubits = 4;

bool noiseless(const NoiseModel& n) { return n.lambda1 == 0.0 && n.lambda2 == 0.0; }

DensityState simulate(const Circuit& c, const NoiseModel& noise) {
  if (noiseless(noise)) return DensityState::pure(run_statevector(c));
  return run_density(c, noise);
}

Estimate summarize(const std::vector<double>& xs) {
  Estimate e;
  const auto n = static_cast<double>(xs.size());
  for (double x : xs) e.mean += x;
  e.mean /= n;
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - e.mean) * (x - e.mean);
    e.stderr_ = std::sqrt(ss / (n - 1.0) / n);
  }
  return e;
}

}  // namespace

DimerQubitModel::DimerQubitModel(const fock::HubbardParams& p)
    : DimerQubitModel(p, swgen::sw_lambdas(p)) {}

DimerQubitModel::DimerQubitModel(const fock::HubbardParams& p, const swgen::LambdaTable& l)
    : params(p),
      lambdas(l),
      hamiltonian(jordan_wigner(fermion_hubbard(p).total(), kQubits)),
      generator(jordan_wigner(fermion_generator(l), kQubits)),
      spin_squared(jordan_wigner(fermion_spin_squared(2), kQubits)) {
  if (p.n_sites != 2) throw std::invalid_argument("DimerQubitModel: dimer parameters required");
}

Circuit variational_circuit(const PauliSum& generator, StateKind kind, double alpha,
                            double theta) {
  Circuit c = prepare_state(kind, alpha);
  c.append(trotter_circuit(generator, -theta));
  return c;
}

Circuit iterative_circuit(const std::vector<PauliSum>& generators, StateKind kind, double alpha) {
  Circuit c = prepare_state(kind, alpha);
  for (auto it = generators.rbegin(); it != generators.rend(); ++it)
    c.append(trotter_circuit(*it, -1.0));
  return c;
}

VqeResult vqe_dimer(const VqeConfig& cfg) {
  cfg.noise.validate();
  if (cfg.repetitions < 1) throw std::invalid_argument("vqe_dimer: repetitions must be >= 1");
  const DimerQubitModel model(cfg.params);
  const double opt_alpha = cfg.optimize_on == StateKind::Ionic ? cfg.ionic_alpha : 0.0;

  VqeResult r;
  auto cost_rng = make_stream(cfg.noise.seed, kShotStream);
  auto energy_at = [&](double theta, std::optional<int> shots) {
    const auto rho =
        simulate(variational_circuit(model.generator, cfg.optimize_on, opt_alpha, theta), cfg.noise);
    return estimate_expectation(rho, model.hamiltonian, shots, cost_rng);
  };

  if (cfg.optimizer == Optimizer::Spsa) {
    auto trace = spsa_minimize([&](double th) { return energy_at(th, cfg.noise.shots); },
                               cfg.theta0, cfg.spsa, cfg.noise.seed);
    r.theta_star = trace.theta_mean;
    r.theta_trace = std::move(trace.thetas);
  } else {
    // Brent needs a deterministic objective: exact expectations of the simulated state.
    msw::ThetaCost cost;
    cost.kind = msw::CostKind::Custom;
    cost.value = [&](double th) { return energy_at(th, std::nullopt); };
    r.theta_star = msw::minimize_theta(cost, cfg.bracket).theta_star;
  }

  const auto c_heis = variational_circuit(model.generator, StateKind::Heisenberg, 0.0, r.theta_star);
  const auto c_ionic =
      variational_circuit(model.generator, StateKind::Ionic, cfg.ionic_alpha, r.theta_star);
  const auto rho_h = simulate(c_heis, cfg.noise);
  const auto rho_i = simulate(c_ionic, cfg.noise);

  std::vector<double> eh(static_cast<std::size_t>(cfg.repetitions));
  std::vector<double> ei(eh.size());
  for (int k = 0; k < cfg.repetitions; ++k) {
    auto rng = make_stream(cfg.noise.seed, kRepetitionStream + static_cast<std::uint64_t>(k));
    eh[static_cast<std::size_t>(k)] =
        estimate_expectation(rho_h, model.hamiltonian, cfg.noise.shots, rng);
    ei[static_cast<std::size_t>(k)] =
        estimate_expectation(rho_i, model.hamiltonian, cfg.noise.shots, rng);
  }
  r.e_heis = summarize(eh);
  r.e_ionic = summarize(ei);
  r.s2_heis = exact_expectation(rho_h, model.spin_squared);
  r.s2_ionic = exact_expectation(rho_i, model.spin_squared);
  r.purity_heis = rho_h.purity();

  const auto h = fock::build_hubbard(cfg.params, fock::build_basis(2, 1, 1)).total();
  const auto singlets = msw::singlet_spectrum(h);
  r.e0_exact = singlets.at(0);
  r.e1_exact = singlets.at(1);
  r.rel_error_heis = std::abs(r.e_heis.mean - r.e0_exact) / std::abs(r.e0_exact);
  r.rel_error_ionic = std::abs(r.e_ionic.mean - r.e1_exact) / std::abs(r.e1_exact);
  r.counts_raw = count_gates(c_heis);
  r.counts_optimized = count_gates(cancel_adjacent_inverses(lower(c_heis)));
  return r;
}

TrotterEnergies iterative_trotter_energies(const msw::IterationTrace& trace,
                                           const fock::HubbardParams& params,
                                           double ionic_alpha) {
  if (trace.steps.empty()) throw std::invalid_argument("iterative_trotter_energies: empty trace");
  const auto h = jordan_wigner(fermion_hubbard(params).total(), kQubits);
  std::vector<PauliSum> gens;
  for (const auto& st : trace.steps)
    gens.push_back(jordan_wigner(fermion_generator(st.lambdas), kQubits));
  TrotterEnergies e;
  e.e_heis = exact_expectation(run_statevector(iterative_circuit(gens, StateKind::Heisenberg, 0.0)), h);
  e.e_ionic = exact_expectation(run_statevector(iterative_circuit(gens, StateKind::Ionic, ionic_alpha)), h);
  return e;
}

}  // namespace swhub::qsim
