// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "oracles.hpp"
#include "swhub/fock.hpp"
#include "swhub/rings.hpp"
#include "swhub/swgen.hpp"

using namespace swhub;
using rings::ThetaMode;

namespace {

double heisenberg_oracle(int n) {
  return oracle::sorted_eigenvalues(oracle::heisenberg_ring(n).real())[0];
}

}  // namespace

TEST(HeisenbergGround, SmallRings) {
  for (int n : {2, 4, 6}) {
    const auto g = rings::heisenberg_ground(n);
    EXPECT_NEAR(g.energy, heisenberg_oracle(n), 1e-10) << "N=" << n;
    EXPECT_NEAR(g.state.norm(), 1.0, 1e-12);
    EXPECT_NEAR(fock::spin_squared(g.basis).expectation(g.state), 0.0, 1e-9);
  }
  EXPECT_NEAR(rings::heisenberg_ground(2).energy, -0.75, 1e-12);
  EXPECT_NEAR(rings::heisenberg_ground(4).energy, -2.0, 1e-10);
}

TEST(HeisenbergGround, RejectsBadSizes) {
  EXPECT_THROW(rings::heisenberg_ground(3), std::invalid_argument);
  EXPECT_THROW(rings::heisenberg_ground(12), std::invalid_argument);
  EXPECT_THROW(rings::RingProblem(5, 4.0), std::invalid_argument);
  EXPECT_THROW(rings::RingProblem(4, 0.0), std::invalid_argument);
}

TEST(ApplyGeneratorExp, IdentityAndDenseAgreement) {
  const auto p = fock::HubbardParams::ring(4, 1.0, 4.0);
  const auto table = swgen::sw_lambdas(p);
  const auto g = rings::heisenberg_ground(4);
  EXPECT_LE((rings::apply_generator_exp(table, 0.0, g.state, g.basis) - g.state).norm(), 1e-14);

  const auto s = swgen::build_generator(table, g.basis).to_dense();
  for (double th : {0.3, 1.0}) {
    const Eigen::VectorXd ref = oracle::expm_antisymmetric(-th * s) * g.state;
    const Eigen::VectorXd v = rings::apply_generator_exp(table, th, g.state, g.basis);
    EXPECT_LE((v - ref).norm(), 1e-10) << "theta=" << th;
    EXPECT_NEAR(v.norm(), 1.0, 1e-12);
  }
}

TEST(RingProblem, DimerIsExactAtOptimum) {
  for (double u : {4.0, 8.0, 20.0}) {
    const auto pt = rings::ring_relative_error(2, u, ThetaMode::Optimized);
    EXPECT_LE(std::abs(pt.rel_error_pct) / 100.0, 1e-8) << "U=" << u;
    EXPECT_NEAR(pt.e_exact, oracle::dimer_singlets(1.0, u)[0], 1e-10);
  }
}

TEST(RingProblem, ExactEnergyMatchesKroneckerOracle) {
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    t(i, (i + 1) % 4) = 1.0;
    t((i + 1) % 4, i) = 1.0;
  }
  const auto h = oracle::hubbard(t, {0, 0, 0, 0}, {4, 4, 4, 4});
  const auto sec = oracle::restrict(h, oracle::sector_states(4, 2, 2));
  const double ref = oracle::sorted_eigenvalues(sec.real())[0];
  EXPECT_NEAR(rings::RingProblem(4, 4.0).exact_energy(), ref, 1e-10);
}

TEST(RingProblem, OptimizedNoWorseThanFixed) {
  for (int n : {4, 6}) {
    for (double u : {4.0, 8.0, 20.0}) {
      const rings::RingProblem pr(n, u);
      const auto fx = pr.evaluate(ThetaMode::Fixed1);
      const auto op = pr.evaluate(ThetaMode::Optimized);
      EXPECT_LE(op.e_theta, fx.e_theta + 1e-12) << "N=" << n << " U=" << u;
      EXPECT_GE(op.e_theta, pr.exact_energy() - 1e-10);
      EXPECT_NEAR(fx.theta, 1.0, 0.0);
    }
  }
}

TEST(RingProblem, ErrorShrinksWithU) {
  for (int n : {4, 6}) {
    double prev = 1e300;
    for (double u : {4.0, 8.0, 20.0}) {
      const double e = rings::ring_relative_error(n, u, ThetaMode::Optimized).rel_error_pct;
      EXPECT_LT(e, prev) << "N=" << n << " U=" << u;
      prev = e;
    }
  }
}

TEST(RingProblem, StrongCouplingLimitIsHeisenberg) {
  const double u = 1e4;
  for (int n : {4, 6}) {
    const rings::RingProblem pr(n, u);
    const double j = 4.0 / u;
    const double ref = j * (rings::heisenberg_ground(n).energy - n / 4.0);
    EXPECT_NEAR(pr.exact_energy() / ref, 1.0, 1e-2) << "N=" << n;
    const auto op = pr.evaluate(ThetaMode::Optimized);
    EXPECT_NEAR(op.e_theta / ref, 1.0, 1e-2) << "N=" << n;
  }
}

TEST(Sweep, RowsAndFailures) {
  const auto r = rings::sweep({2, 4}, {4.0, 8.0}, {ThetaMode::Fixed1, ThetaMode::Optimized});
  ASSERT_EQ(r.rows.size(), 8u);
  EXPECT_TRUE(r.failures.empty());
  EXPECT_EQ(r.rows[0].n_sites, 2);
  EXPECT_EQ(r.rows[0].theta_mode, ThetaMode::Fixed1);
  EXPECT_EQ(r.rows[1].theta_mode, ThetaMode::Optimized);
  EXPECT_EQ(r.rows[2].u_over_t, 8.0);
  EXPECT_EQ(r.rows.back().n_sites, 4);
}
