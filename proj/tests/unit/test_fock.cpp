// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "swhub/errors.hpp"
#include "swhub/fock.hpp"
#include "swhub/linalg.hpp"

using namespace swhub;
using fock::FockState;

namespace {

constexpr std::uint64_t kUpDown = 0b1001;  // up on site 0, down on site 1
constexpr std::uint64_t kDownUp = 0b0110;
constexpr std::uint64_t kDoubleFirst = 0b0011;
constexpr std::uint64_t kDoubleSecond = 0b1100;

std::size_t at(const fock::Basis& b, std::uint64_t bits) { return b.index(FockState{bits}); }

fock::HubbardParams inhomogeneous_ring4() {
  fock::HubbardParams p = fock::HubbardParams::ring(4, 1.0, 3.0);
  p.t(0, 1) = p.t(1, 0) = 0.7;
  p.t(2, 3) = p.t(3, 2) = 1.3;
  p.mu = {0.4, -0.2, 0.1, -0.6};
  p.U = {3.0, 5.5, 2.0, 4.0};
  return p;
}

Eigen::MatrixXd random_symmetric(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = g(rng);
  return a + a.transpose();
}

}  // namespace

TEST(BuildBasis, SectorSizes) {
  EXPECT_EQ(fock::build_basis(2, 1, 1)->size(), 4u);
  EXPECT_EQ(fock::build_basis(2, 2, 2)->size(), 1u);
  EXPECT_EQ(fock::build_basis(6, 3, 3)->size(),
            static_cast<std::size_t>(oracle::binomial(6, 3) * oracle::binomial(6, 3)));
  EXPECT_EQ(fock::build_basis(5, 2, 3)->size(),
            static_cast<std::size_t>(oracle::binomial(5, 2) * oracle::binomial(5, 3)));
}

TEST(BuildBasis, InvalidCountsThrow) {
  EXPECT_THROW(fock::build_basis(2, 3, 1), SectorError);
  EXPECT_THROW(fock::build_basis(2, -1, 1), SectorError);
}

TEST(BuildBasis, SortedAndIndexIsInverse) {
  const auto b = fock::build_basis(4, 2, 2);
  const auto ref = oracle::sector_states(4, 2, 2);
  ASSERT_EQ(b->size(), ref.size());
  for (std::size_t i = 0; i < b->size(); ++i) {
    EXPECT_EQ(b->state(i).bits, ref[i]);
    EXPECT_EQ(b->index(b->state(i)), i);
    EXPECT_EQ(b->state(i).count_up(), 2);
    EXPECT_EQ(b->state(i).count_down(), 2);
  }
  EXPECT_FALSE(b->find(FockState{0b1}).has_value());
}

TEST(BuildHubbard, DimerH0Diagonal) {
  const auto b = fock::build_basis(2, 1, 1);
  const auto h = fock::build_hubbard(fock::HubbardParams::dimer(1.0, 0.0, 0.0, 4.0, 4.0), b);
  const auto d = h.h0.to_dense();
  EXPECT_EQ(d(at(*b, kUpDown), at(*b, kUpDown)), 0.0);
  EXPECT_EQ(d(at(*b, kDownUp), at(*b, kDownUp)), 0.0);
  EXPECT_EQ(d(at(*b, kDoubleFirst), at(*b, kDoubleFirst)), 4.0);
  EXPECT_EQ(d(at(*b, kDoubleSecond), at(*b, kDoubleSecond)), 4.0);
  EXPECT_EQ((d - Eigen::MatrixXd(d.diagonal().asDiagonal())).norm(), 0.0);
}

TEST(BuildHubbard, DimerHoppingCouplesCovalentToIonic) {
  const auto b = fock::build_basis(2, 1, 1);
  const auto v = fock::build_hubbard(fock::HubbardParams::dimer(1.0, 0.0, 0.0, 4.0, 4.0), b)
                     .v.to_dense();
  for (auto cov : {kUpDown, kDownUp}) {
    for (auto ion : {kDoubleFirst, kDoubleSecond})
      EXPECT_DOUBLE_EQ(std::abs(v(at(*b, cov), at(*b, ion))), 1.0);
    EXPECT_EQ(v(at(*b, cov), at(*b, kUpDown == cov ? kDownUp : kUpDown)), 0.0);
  }
  EXPECT_EQ(v.diagonal().norm(), 0.0);
  EXPECT_EQ((v - v.transpose()).norm(), 0.0);
}

TEST(BuildHubbard, ChemicalPotentialShifts) {
  // mu = (1, -1): covalent states 0, ionic 2 mu_i + U
  const auto b = fock::build_basis(2, 1, 1);
  const Eigen::VectorXd d = fock::build_hubbard(fock::HubbardParams::dimer(1.0, 1.0, -1.0, 4.0, 4.0), b)
                     .h0.to_dense()
                     .diagonal();
  EXPECT_DOUBLE_EQ(d[static_cast<Eigen::Index>(at(*b, kUpDown))], 0.0);
  EXPECT_DOUBLE_EQ(d[static_cast<Eigen::Index>(at(*b, kDownUp))], 0.0);
  EXPECT_DOUBLE_EQ(d[static_cast<Eigen::Index>(at(*b, kDoubleFirst))], 6.0);
  EXPECT_DOUBLE_EQ(d[static_cast<Eigen::Index>(at(*b, kDoubleSecond))], 2.0);
}

TEST(BuildHubbard, MatchesKroneckerOracle) {
  const auto p = inhomogeneous_ring4();
  const auto states = oracle::sector_states(4, 2, 2);
  const auto ref = oracle::restrict(oracle::hubbard(p.t, p.mu, p.U), states);
  const auto h = fock::build_hubbard(p, fock::build_basis(4, 2, 2)).total().to_dense();
  EXPECT_LE((h.cast<oracle::cplx>() - ref).cwiseAbs().maxCoeff(), 1e-12);

  const auto full = fock::build_hubbard(p, fock::build_full_basis(4)).total().to_dense();
  EXPECT_LE((full.cast<oracle::cplx>() - oracle::hubbard(p.t, p.mu, p.U)).cwiseAbs().maxCoeff(),
            1e-12);
}

TEST(BuildHubbard, H0DiagonalAndVZeroDiagonal) {
  const auto p = inhomogeneous_ring4();
  const auto h = fock::build_hubbard(p, fock::build_basis(4, 2, 2));
  const auto d0 = h.h0.to_dense();
  EXPECT_EQ((d0 - Eigen::MatrixXd(d0.diagonal().asDiagonal())).norm(), 0.0);
  EXPECT_EQ(h.v.to_dense().diagonal().norm(), 0.0);
}

TEST(HeisenbergProjector, RanksAndIdempotence) {
  const auto b2 = fock::build_basis(2, 1, 1);
  const auto p2 = fock::heisenberg_projector(b2).to_dense();
  EXPECT_DOUBLE_EQ(p2.trace(), 2.0);
  EXPECT_EQ(p2(at(*b2, kDoubleFirst), at(*b2, kDoubleFirst)), 0.0);
  EXPECT_LE((p2 * p2 - p2).norm(), 0.0);

  const auto p4 = fock::heisenberg_projector(fock::build_basis(4, 2, 2)).to_dense();
  EXPECT_DOUBLE_EQ(p4.trace(), 6.0);
  EXPECT_LE((p4 * p4 - p4).norm(), 0.0);
}

TEST(BlockSplit, Examples) {
  const auto b = fock::build_basis(2, 1, 1);
  const auto h = fock::build_hubbard(fock::HubbardParams::dimer(1.0, 0.0, 0.0, 4.0, 4.0), b);
  const auto p = fock::heisenberg_projector(b);
  EXPECT_EQ(fock::block_split(h.h0, p).off_diagonal.frobenius_norm(), 0.0);
  const auto vs = fock::block_split(h.v, p);
  EXPECT_EQ(vs.diagonal.frobenius_norm(), 0.0);
  EXPECT_EQ(frobenius_distance(vs.off_diagonal, h.v), 0.0);
  const auto ps = fock::block_split(p, p);
  EXPECT_EQ(frobenius_distance(ps.diagonal, p), 0.0);
  EXPECT_EQ(ps.off_diagonal.frobenius_norm(), 0.0);
}

TEST(BlockSplit, RandomHermitianProperties) {
  const auto b = fock::build_basis(4, 2, 2);
  const auto pm = fock::heisenberg_projector(b);
  const Eigen::MatrixXd p = pm.to_dense();
  const Eigen::MatrixXd q = Eigen::MatrixXd::Identity(p.rows(), p.cols()) - p;
  EXPECT_LE((p * q).norm(), 0.0);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const MatrixOperator o(b, random_symmetric(static_cast<Eigen::Index>(b->size()), seed), true);
    const auto s = fock::block_split(o, pm);
    EXPECT_LE(frobenius_distance(s.diagonal + s.off_diagonal, o), 1e-12);
    EXPECT_LE((p * s.diagonal.to_dense() * q).norm(), 1e-12);
    EXPECT_LE((p * s.off_diagonal.to_dense() * p).norm(), 1e-12);
  }
}

TEST(ExactEigensolve, DimerSpectrum) {
  const auto b = fock::build_basis(2, 1, 1);
  const auto h = fock::build_hubbard(fock::HubbardParams::dimer(1.0, 0.0, 0.0, 4.0, 4.0), b).total();
  const auto pairs = fock::exact_eigensolve(h, 4);
  const auto s = oracle::dimer_singlets(1.0, 4.0);
  EXPECT_NEAR(pairs[0].value, 2.0 - 2.0 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(pairs[0].value, s[0], 1e-12);
  // the m=0 triplet sits at 0 between the singlets
  EXPECT_NEAR(pairs[1].value, 0.0, 1e-12);
  EXPECT_NEAR(pairs[2].value, s[1], 1e-12);
  EXPECT_NEAR(pairs[3].value, s[2], 1e-12);
  for (const auto& e : pairs) EXPECT_LE((h.apply(e.vector) - e.value * e.vector).norm(), 1e-10);
}

TEST(ExactEigensolve, AtomicLimit) {
  const auto b = fock::build_basis(2, 1, 1);
  const auto h = fock::build_hubbard(fock::HubbardParams::dimer(1.0, 0.0, 0.0, 1e6, 1e6), b).total();
  const double e0 = fock::exact_eigensolve(h, 1)[0].value;
  EXPECT_LT(e0, 0.0);
  EXPECT_GT(e0, -1e-5);
}

TEST(ExactEigensolve, RotationInvariance) {
  const auto b = fock::build_basis(4, 2, 2);
  const auto h = fock::build_hubbard(inhomogeneous_ring4(), b).total().to_dense();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(random_symmetric(h.rows(), 9));
  const Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = q.transpose() * h * q;
  const MatrixOperator rot(b, Eigen::MatrixXd(0.5 * (r + r.transpose())), true);
  const auto a = fock::exact_eigensolve(MatrixOperator(b, h, true), 5);
  const auto c = fock::exact_eigensolve(rot, 5);
  for (int k = 0; k < 5; ++k) EXPECT_NEAR(a[k].value, c[k].value, 1e-10);
}

TEST(ExactEigensolve, LanczosAgreesWithDense) {
  const auto b = fock::build_basis(6, 3, 3);
  const auto h = fock::build_hubbard(fock::HubbardParams::ring(6, 1.0, 4.0), b).total();
  const auto dense = oracle::sorted_eigenvalues(h.to_dense());
  const auto sp = h.to_sparse();
  const auto ritz = linalg::lanczos_lowest(
      [&sp](const Eigen::VectorXd& v) { return Eigen::VectorXd(sp * v); }, h.dim(), 3);
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(ritz[static_cast<std::size_t>(k)].value, dense[k], 1e-9);
    EXPECT_LE(ritz[static_cast<std::size_t>(k)].residual, 1e-9);
  }
}

TEST(ExactEigensolve, RejectsNonHermitian) {
  const auto b = fock::build_basis(2, 1, 1);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  m(0, 1) = 1.0;
  EXPECT_THROW(fock::exact_eigensolve(MatrixOperator(b, m, false), 1), std::invalid_argument);
}

TEST(SpinSquared, SingletAndTriplet) {
  const auto b = fock::build_basis(2, 1, 1);
  const auto s2 = fock::spin_squared(b);
  Eigen::VectorXd singlet = Eigen::VectorXd::Zero(4);
  singlet[static_cast<Eigen::Index>(at(*b, kUpDown))] = 1.0 / std::sqrt(2.0);
  singlet[static_cast<Eigen::Index>(at(*b, kDownUp))] = -1.0 / std::sqrt(2.0);
  EXPECT_NEAR(s2.expectation(singlet), 0.0, 1e-14);

  const auto bt = fock::build_basis(2, 2, 0);
  Eigen::VectorXd upup = Eigen::VectorXd::Zero(1);
  upup[0] = 1.0;
  EXPECT_NEAR(fock::spin_squared(bt).expectation(upup), 2.0, 1e-14);
}

TEST(SpinSquared, EigenvaluesAreSpinMultiplets) {
  for (auto [n, up, dn] : {std::tuple{3, 2, 1}, std::tuple{4, 2, 2}}) {
    const auto ev = oracle::sorted_eigenvalues(fock::spin_squared(fock::build_basis(n, up, dn)).to_dense());
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
      const double s = 0.5 * (std::sqrt(1.0 + 4.0 * ev[k]) - 1.0);
      EXPECT_NEAR(2.0 * s, std::round(2.0 * s), 1e-9) << "eigenvalue " << ev[k];
    }
  }
}
