// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "swhub/qsim/pauli.hpp"
#include "swhub/qsim/simulator.hpp"

namespace swhub::qsim {

/// Independent generator for stream `stream` of a global seed.
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream);

/// Named stream ids of the global seed.
inline constexpr std::uint64_t kOptimizerStream = 1;
inline constexpr std::uint64_t kShotStream = 2;
inline constexpr std::uint64_t kRepetitionStream = 1000;  // + repetition index

double exact_expectation(const Eigen::VectorXcd& psi, const PauliString& p);
double exact_expectation(const DensityState& rho, const PauliString& p);
/// Real part of sum_k c_k <P_k> without sampling.
double exact_expectation(const Eigen::VectorXcd& psi, const PauliSum& sum);
double exact_expectation(const DensityState& rho, const PauliSum& sum);

/// Real part of sum_k c_k <P_k>; each non-identity string is sampled with `shots`
/// two-outcome measurements (nullopt = exact).
double estimate_expectation(const Eigen::VectorXcd& psi, const PauliSum& sum,
                            std::optional<int> shots, std::mt19937_64& rng);
double estimate_expectation(const DensityState& rho, const PauliSum& sum,
                            std::optional<int> shots, std::mt19937_64& rng);
double estimate_expectation(const DensityState& rho, const PauliSum& sum,
                            std::optional<int> shots, std::uint64_t seed);
double estimate_expectation(const Eigen::VectorXcd& psi, const PauliSum& sum,
                            std::optional<int> shots, std::uint64_t seed);

struct SpsaOptions {
  double a = 0.1;
  double c = 0.1;
  double A = 100.0;
  double alpha = 0.602;
  double gamma = 0.101;
  int max_iter = 1000;
  int trailing = 25;
};

struct SpsaTrace {
  std::vector<double> thetas;  // theta_0 .. theta_max_iter
  double theta_mean = 0.0;     // mean of the trailing iterates
  int n_evals = 0;
};

/// One-parameter SPSA with random +-1 perturbation directions.
SpsaTrace spsa_minimize(const std::function<double(double)>& cost, double theta0,
                        const SpsaOptions& options, std::uint64_t seed);

}  // namespace swhub::qsim
