// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#include "swhub/swgen.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "swhub/errors.hpp"

namespace swhub::swgen {

using fock::BasisPtr;
using fock::FockState;
using fock::orbital_index;

namespace {

constexpr int spin_index(Spin s) { return static_cast<int>(s); }

void check_sites(const fock::Basis& basis, int n_sites) {
  if (basis.n_sites() != n_sites)
    throw DimensionError("basis has " + std::to_string(basis.n_sites()) +
                         " sites, coefficient table " + std::to_string(n_sites));
}

/// Adds coeff * gamma_{to<-from}(spin) restricted to states where `keep` holds.
template <typename Pred>
void add_hops(const fock::Basis& basis, std::vector<MatrixOperator::Triplet>& trips, int to,
              int from, Spin s, double coeff, Pred keep) {
  const int oto = orbital_index(to, s);
  const int ofrom = orbital_index(from, s);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const FockState st = basis.state(c);
    if (!keep(st)) continue;
    auto r = fock::hop(st, oto, ofrom);
    if (!r) continue;
    auto row = basis.find(r->state);
    if (!row) continue;
    trips.emplace_back(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(c),
                       coeff * r->sign);
  }
}

/// Product of two opposite-spin hops: (c†_a1 c_b1)_up (c†_a2 c_b2)_down.
void add_two_hops(const fock::Basis& basis, std::vector<MatrixOperator::Triplet>& trips,
                  std::pair<int, int> up, std::pair<int, int> down) {
  for (std::size_t c = 0; c < basis.size(); ++c) {
    auto r1 = fock::hop(basis.state(c), orbital_index(down.first, Spin::Down),
                        orbital_index(down.second, Spin::Down));
    if (!r1) continue;
    auto r2 = fock::hop(r1->state, orbital_index(up.first, Spin::Up),
                        orbital_index(up.second, Spin::Up));
    if (!r2) continue;
    auto row = basis.find(r2->state);
    if (!row) continue;
    trips.emplace_back(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(c),
                       static_cast<double>(r1->sign * r2->sign));
  }
}

}  // namespace

LambdaTable::LambdaTable(int n_sites, std::vector<PairLambdas> pairs)
    : n_sites_(n_sites), pairs_(std::move(pairs)) {
  for (const auto& p : pairs_)
    if (p.i >= p.j || p.i < 0 || p.j >= n_sites_)
      throw std::invalid_argument("LambdaTable: pairs must satisfy 0 <= i < j < n_sites");
  std::sort(pairs_.begin(), pairs_.end(),
            [](const PairLambdas& a, const PairLambdas& b) {
              return std::pair{a.i, a.j} < std::pair{b.i, b.j};
            });
}

const PairLambdas& LambdaTable::pair(int i, int j) const {
  const int a = std::min(i, j);
  const int b = std::max(i, j);
  for (const auto& p : pairs_)
    if (p.i == a && p.j == b) return p;
  throw std::out_of_range("LambdaTable: no entry for pair (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
}

double LambdaTable::lambda(int i, int j, Spin s, int channel) const {
  const auto& p = pair(i, j);
  const auto& row = p.lambda[static_cast<std::size_t>(spin_index(s))];
  if (i < j) return row[static_cast<std::size_t>(channel)];
  return -row[static_cast<std::size_t>(swapped_channel(channel))];
}

double LambdaTable::hopping(int i, int j) const { return pair(i, j).hopping; }

std::optional<double> LambdaTable::beta(int i, int j, Spin s) const {
  const double l2 = lambda(i, j, s, kSecond);
  if (l2 == 0.0) return std::nullopt;
  return lambda(i, j, s, kFirst) / l2;
}

double LambdaTable::alpha(int i, int j, Spin s) const {
  const double l1 = lambda(i, j, s, kFirst);
  const double l2 = lambda(i, j, s, kSecond);
  return std::sqrt(0.5 * (l1 * l1 + l2 * l2));
}

double LambdaTable::w1_initial(int i, int j, Spin s) const {
  const double t = -hopping(i, j);
  return lambda(i, j, s, kSecond) * t + lambda(i, j, s, kFirst) * t;
}

double LambdaTable::w2_initial(int i, int j, Spin s) const {
  const double t = -hopping(i, j);
  return lambda(i, j, s, kFirst) * t - lambda(i, j, s, kSecond) * t;
}

LambdaTable LambdaTable::with_lambda(int i, int j, Spin s, int channel, double value) const {
  auto pairs = pairs_;
  const int a = std::min(i, j);
  const int b = std::max(i, j);
  const int x = i < j ? channel : swapped_channel(channel);
  const double v = i < j ? value : -value;
  for (auto& p : pairs)
    if (p.i == a && p.j == b) {
      p.lambda[static_cast<std::size_t>(spin_index(s))][static_cast<std::size_t>(x)] = v;
      return LambdaTable(n_sites_, std::move(pairs));
    }
  throw std::out_of_range("LambdaTable::with_lambda: unknown pair");
}

double channel_denominator(const fock::HubbardParams& p, int i, int j, int channel) {
  const auto ui = static_cast<std::size_t>(i);
  const auto uj = static_cast<std::size_t>(j);
  const double dmu = p.mu[ui] - p.mu[uj];
  switch (channel) {
    case kEmpty: return dmu;
    case kFirst: return dmu + p.U[ui];
    case kSecond: return dmu - p.U[uj];
    case kBoth: return dmu + p.U[ui] - p.U[uj];
    default: throw std::out_of_range("channel_denominator: channel must be 0..3");
  }
}

LambdaTable sw_lambdas(const fock::HubbardParams& params) {
  params.validate();
  double scale = 1.0;
  for (int i = 0; i < params.n_sites; ++i) {
    const auto u = static_cast<std::size_t>(i);
    scale = std::max({scale, std::abs(params.mu[u]), std::abs(params.U[u])});
  }
  std::vector<PairLambdas> pairs;
  for (auto [i, j] : params.bonds()) {
    PairLambdas p;
    p.i = i;
    p.j = j;
    p.hopping = params.t(i, j);
    for (int x = 0; x < kChannels; ++x) {
      const double den = channel_denominator(params, i, j, x);
      // Resonant channels carry no generator component.
      const double lam = std::abs(den) <= 1e-12 * scale ? 0.0 : -p.hopping / den;
      for (auto& row : p.lambda) row[static_cast<std::size_t>(x)] = lam;
    }
    pairs.push_back(p);
  }
  return LambdaTable(params.n_sites, std::move(pairs));
}

int active_channel(FockState s, int i, int j, Spin hopping_spin) {
  const Spin spec = fock::opposite(hopping_spin);
  const bool ni = s.occupied(i, spec);
  const bool nj = s.occupied(j, spec);
  return (ni ? 1 : 0) + (nj ? 2 : 0);
}

MatrixOperator build_generator(const LambdaTable& table, BasisPtr basis) {
  check_sites(*basis, table.n_sites());
  std::vector<MatrixOperator::Triplet> trips;
  for (const auto& p : table.pairs()) {
    for (Spin s : {Spin::Up, Spin::Down}) {
      const auto& lam = p.lambda[static_cast<std::size_t>(spin_index(s))];
      const int oi = orbital_index(p.i, s);
      const int oj = orbital_index(p.j, s);
      for (std::size_t c = 0; c < basis->size(); ++c) {
        const FockState st = basis->state(c);
        const double l = lam[static_cast<std::size_t>(active_channel(st, p.i, p.j, s))];
        if (l == 0.0) continue;
        for (auto [to, from, sign] : {std::tuple{oi, oj, 1.0}, std::tuple{oj, oi, -1.0}}) {
          auto r = fock::hop(st, to, from);
          if (!r) continue;
          auto row = basis->find(r->state);
          if (!row) continue;
          trips.emplace_back(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(c),
                             sign * l * r->sign);
        }
      }
    }
  }
  return MatrixOperator::from_triplets(std::move(basis), trips, false);
}

double first_order_residual(const MatrixOperator& s, const MatrixOperator& h0,
                            const MatrixOperator& v) {
  return (commutator(s, h0) + v).frobenius_norm();
}

MatrixOperator channel_hopping(BasisPtr basis, int i, int j, Spin s, int channel,
                               double reverse_sign) {
  std::vector<MatrixOperator::Triplet> trips;
  auto in_channel = [&](FockState st) { return active_channel(st, i, j, s) == channel; };
  add_hops(*basis, trips, i, j, s, 1.0, in_channel);
  add_hops(*basis, trips, j, i, s, reverse_sign, in_channel);
  return MatrixOperator::from_triplets(std::move(basis), trips, reverse_sign == 1.0);
}

MatrixOperator channel_density(BasisPtr basis, int i, int j, Spin s, int channel) {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis->size()));
  for (std::size_t c = 0; c < basis->size(); ++c) {
    const FockState st = basis->state(c);
    if (active_channel(st, i, j, s) != channel) continue;
    d[static_cast<Eigen::Index>(c)] =
        static_cast<double>(st.occupied(i, s)) - static_cast<double>(st.occupied(j, s));
  }
  return MatrixOperator::diagonal(std::move(basis), d);
}

MatrixOperator exchange_operator(BasisPtr basis, int i, int j) {
  std::vector<MatrixOperator::Triplet> trips;
  add_two_hops(*basis, trips, {i, j}, {j, i});
  add_two_hops(*basis, trips, {j, i}, {i, j});
  return MatrixOperator::from_triplets(std::move(basis), trips, true);
}

MatrixOperator pair_hopping_operator(BasisPtr basis, int i, int j) {
  std::vector<MatrixOperator::Triplet> trips;
  add_two_hops(*basis, trips, {i, j}, {i, j});
  add_two_hops(*basis, trips, {j, i}, {j, i});
  return MatrixOperator::from_triplets(std::move(basis), trips, true);
}

}  // namespace swhub::swgen
