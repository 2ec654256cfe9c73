// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#include "swhub/qsim/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swhub::qsim {

namespace {

double sample(double exact, std::optional<int> shots, std::mt19937_64& rng) {
  if (!shots) return exact;
  if (*shots < 1) throw std::invalid_argument("estimate_expectation: shots must be >= 1");
  const double p_plus = std::clamp(0.5 * (1.0 + exact), 0.0, 1.0);
  std::binomial_distribution<int> dist(*shots, p_plus);
  const int k = dist(rng);
  return 2.0 * static_cast<double>(k) / static_cast<double>(*shots) - 1.0;
}

template <class State>
double estimate_impl(const State& s, const PauliSum& sum, std::optional<int> shots,
                     std::mt19937_64& rng) {
  double total = 0.0;
  for (const auto& [p, c] : sum.terms()) {
    if (p.is_identity()) {
      total += c.real();
      continue;
    }
    total += c.real() * sample(exact_expectation(s, p), shots, rng);
  }
  return total;
}

}  // namespace

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

double exact_expectation(const Eigen::VectorXcd& psi, const PauliString& p) {
  cplx acc = 0.0;
  for (Eigen::Index j = 0; j < psi.size(); ++j) {
    const auto uj = static_cast<std::uint64_t>(j);
    acc += std::conj(psi[static_cast<Eigen::Index>(uj ^ p.x_mask())]) * p.phase(uj) * psi[j];
  }
  return acc.real();
}

double exact_expectation(const DensityState& rho, const PauliString& p) {
  // tr(rho P) = sum_j rho(j, j^x) phase(j)
  const auto& m = rho.matrix();
  cplx acc = 0.0;
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    const auto uj = static_cast<std::uint64_t>(j);
    acc += m(j, static_cast<Eigen::Index>(uj ^ p.x_mask())) * p.phase(uj);
  }
  return acc.real();
}

double exact_expectation(const Eigen::VectorXcd& psi, const PauliSum& sum) {
  std::mt19937_64 unused;
  return estimate_impl(psi, sum, std::nullopt, unused);
}

double exact_expectation(const DensityState& rho, const PauliSum& sum) {
  std::mt19937_64 unused;
  return estimate_impl(rho, sum, std::nullopt, unused);
}

double estimate_expectation(const Eigen::VectorXcd& psi, const PauliSum& sum,
                            std::optional<int> shots, std::mt19937_64& rng) {
  return estimate_impl(psi, sum, shots, rng);
}

double estimate_expectation(const DensityState& rho, const PauliSum& sum,
                            std::optional<int> shots, std::mt19937_64& rng) {
  return estimate_impl(rho, sum, shots, rng);
}

double estimate_expectation(const DensityState& rho, const PauliSum& sum,
                            std::optional<int> shots, std::uint64_t seed) {
  auto rng = make_stream(seed, kShotStream);
  return estimate_impl(rho, sum, shots, rng);
}

double estimate_expectation(const Eigen::VectorXcd& psi, const PauliSum& sum,
                            std::optional<int> shots, std::uint64_t seed) {
  auto rng = make_stream(seed, kShotStream);
  return estimate_impl(psi, sum, shots, rng);
}

SpsaTrace spsa_minimize(const std::function<double(double)>& cost, double theta0,
                        const SpsaOptions& o, std::uint64_t seed) {
  if (o.max_iter < 1 || o.trailing < 1)
    throw std::invalid_argument("spsa_minimize: max_iter and trailing must be positive");
  auto rng = make_stream(seed, kOptimizerStream);
  std::bernoulli_distribution coin(0.5);
  SpsaTrace tr;
  tr.thetas.reserve(static_cast<std::size_t>(o.max_iter) + 1);
  double theta = theta0;
  tr.thetas.push_back(theta);
  for (int k = 0; k < o.max_iter; ++k) {
    const double ak = o.a / std::pow(k + 1 + o.A, o.alpha);
    const double ck = o.c / std::pow(k + 1, o.gamma);
    const double delta = coin(rng) ? 1.0 : -1.0;
    const double fp = cost(theta + ck * delta);
    const double fm = cost(theta - ck * delta);
    tr.n_evals += 2;
    const double g = (fp - fm) / (2.0 * ck * delta);
    theta -= ak * g;
    tr.thetas.push_back(theta);
  }
  const auto n = std::min<std::size_t>(static_cast<std::size_t>(o.trailing), tr.thetas.size());
  double s = 0.0;
  for (std::size_t k = tr.thetas.size() - n; k < tr.thetas.size(); ++k) s += tr.thetas[k];
  tr.theta_mean = s / static_cast<double>(n);
  return tr;
}

}  // namespace swhub::qsim
