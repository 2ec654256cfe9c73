// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#include "swhub/rings.hpp"

#include <cmath>
#include <string>

#include "swhub/errors.hpp"
#include "swhub/linalg.hpp"

namespace swhub::rings {

using fock::FockState;
using fock::Spin;
using fock::orbital_index;

namespace {

void check_sites(int n) {
  if (n < 2 || n > kMaxSites)
    throw std::invalid_argument("ring size must be in [2, " + std::to_string(kMaxSites) +
                                "], got " + std::to_string(n));
  if (n % 2 != 0) throw std::invalid_argument("ring size must be even, got " + std::to_string(n));
}

}  // namespace

std::string to_string(ThetaMode mode) {
  return mode == ThetaMode::Fixed1 ? "fixed-1" : "optimized";
}

HeisenbergGround heisenberg_ground(int n) {
  check_sites(n);
  auto sector = fock::build_basis(n, n / 2, n / 2);
  std::vector<FockState> singles;
  for (const auto& s : sector->states()) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = s.occupied(i, Spin::Up) != s.occupied(i, Spin::Down);
    if (ok) singles.push_back(s);
  }
  auto spin_basis = std::make_shared<const fock::Basis>(fock::Basis::from_states(n, singles));

  // s_i.s_j = Sz_i Sz_j + (S+_i S-_j + S-_i S+_j)/2 with fermionic spin operators.
  std::vector<std::pair<int, int>> bonds;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    if (n == 2 && i == 1) break;
    bonds.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::vector<MatrixOperator::Triplet> trips;
  for (std::size_t c = 0; c < spin_basis->size(); ++c) {
    const FockState s = spin_basis->state(c);
    const auto col = static_cast<Eigen::Index>(c);
    for (auto [i, j] : bonds) {
      const bool ui = s.occupied(i, Spin::Up);
      const bool uj = s.occupied(j, Spin::Up);
      trips.emplace_back(col, col, ui == uj ? 0.25 : -0.25);
      if (ui == uj) continue;
      // S+_a S-_b = c+_a,up c_a,dn c+_b,dn c_b,up with a the down site.
      const int a = ui ? j : i;
      const int b = ui ? i : j;
      auto r1 = fock::hop(s, orbital_index(b, Spin::Down), orbital_index(b, Spin::Up));
      if (!r1) continue;
      auto r2 = fock::hop(r1->state, orbital_index(a, Spin::Up), orbital_index(a, Spin::Down));
      if (!r2) continue;
      const auto row = static_cast<Eigen::Index>(spin_basis->index(r2->state));
      trips.emplace_back(row, col, 0.5 * r1->sign * r2->sign);
    }
  }
  const auto hs = MatrixOperator::from_triplets(spin_basis, trips, true);
  auto ground = fock::exact_eigensolve(hs, 1).front();

  HeisenbergGround out;
  out.basis = sector;
  out.energy = ground.value;
  out.state = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(sector->size()));
  for (std::size_t c = 0; c < spin_basis->size(); ++c)
    out.state[static_cast<Eigen::Index>(sector->index(spin_basis->state(c)))] =
        ground.vector[static_cast<Eigen::Index>(c)];
  // Fix the global sign by the largest component.
  Eigen::Index imax = 0;
  out.state.cwiseAbs().maxCoeff(&imax);
  if (out.state[imax] < 0.0) out.state = -out.state;
  out.state.normalize();
  return out;
}

Eigen::VectorXd apply_generator_exp(const swgen::LambdaTable& table, double theta,
                                    const Eigen::VectorXd& state, fock::BasisPtr basis) {
  const auto s = swgen::build_generator(table, std::move(basis));
  if (state.size() != s.dim()) throw DimensionError("apply_generator_exp: state size mismatch");
  auto res = linalg::expmv([&s](const Eigen::VectorXd& v) { return s.apply(v); }, -theta, state);
  return res.vector;
}

RingProblem::RingProblem(int n, double u_over_t, double t) : n_sites_(n), u_over_t_(u_over_t) {
  check_sites(n);
  if (!(u_over_t > 0.0)) throw std::invalid_argument("RingProblem: U/t must be positive");
  const auto params = fock::HubbardParams::ring(n, t, u_over_t * t);
  const auto ground = heisenberg_ground(n);
  const auto split = fock::build_hubbard(params, ground.basis);
  const auto h = split.total();
  e_exact_ = fock::exact_eigensolve(h, 1).front().value;
  cost_ = msw::cost_energy(swgen::sw_lambdas(params), ground.state, h);
}

double RingProblem::energy(double theta) const { return cost_.value(theta); }

SweepPoint RingProblem::evaluate(ThetaMode mode, msw::Bracket bracket) const {
  SweepPoint p;
  p.n_sites = n_sites_;
  p.u_over_t = u_over_t_;
  p.theta_mode = mode;
  p.bracket = bracket;
  p.e_exact = e_exact_;
  if (mode == ThetaMode::Fixed1) {
    p.theta = 1.0;
    p.e_theta = energy(1.0);
  } else {
    auto r = msw::minimize_theta(cost_, bracket);
    p.theta = r.theta_star;
    p.e_theta = r.value;
    // theta = 1 lies inside the bracket; keep the variational bound exact.
    if (bracket.lo <= 1.0 && 1.0 <= bracket.hi) {
      const double e1 = energy(1.0);
      if (e1 < p.e_theta) {
        p.theta = 1.0;
        p.e_theta = e1;
      }
    }
  }
  p.rel_error_pct = 100.0 * std::abs(p.e_theta - p.e_exact) / std::abs(p.e_exact);
  return p;
}

SweepPoint ring_relative_error(int n, double u_over_t, ThetaMode mode) {
  return RingProblem(n, u_over_t).evaluate(mode);
}

SweepResult sweep(const std::vector<int>& n_list, const std::vector<double>& u_list,
                  const std::vector<ThetaMode>& modes) {
  SweepResult out;
  for (int n : n_list) {
    for (double u : u_list) {
      try {
        RingProblem prob(n, u);
        for (auto m : modes) out.rows.push_back(prob.evaluate(m));
      } catch (const std::exception& e) {
        out.failures.push_back(SweepFailure{n, u, e.what()});
      }
    }
  }
  return out;
}

}  // namespace swhub::rings
