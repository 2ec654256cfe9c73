// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "swhub/fock.hpp"
#include "swhub/matrix_operator.hpp"

namespace swhub::swgen {

using fock::Spin;

inline constexpr int kChannels = 4;

/// Projector channel on the spectator spin of a hop j -> i:
/// 0 both empty, 1 only i occupied, 2 only j occupied, 3 both occupied.
enum Channel : int { kEmpty = 0, kFirst = 1, kSecond = 2, kBoth = 3 };

/// Coefficients for one bond, stored for the orientation i < j.
struct PairLambdas {
  int i = 0;
  int j = 0;
  double hopping = 0.0;
  std::array<std::array<double, kChannels>, 2> lambda{};  // [spin][channel]
};

class LambdaTable {
 public:
  LambdaTable(int n_sites, std::vector<PairLambdas> pairs);

  int n_sites() const { return n_sites_; }
  std::span<const PairLambdas> pairs() const { return pairs_; }

  /// Any orientation; i > j returns the antisymmetric partner.
  double lambda(int i, int j, Spin s, int channel) const;
  double hopping(int i, int j) const;

  /// lambda_1 / lambda_2, only defined when lambda_2 != 0.
  std::optional<double> beta(int i, int j, Spin s) const;
  /// sqrt((lambda_1^2 + lambda_2^2) / 2), non-negative root.
  double alpha(int i, int j, Spin s) const;
  /// W1 = lambda_2 t_1 + lambda_1 t_2 and W2 = lambda_1 t_1 - lambda_2 t_2 with t_x = -t_ij.
  double w1_initial(int i, int j, Spin s) const;
  double w2_initial(int i, int j, Spin s) const;

  LambdaTable with_lambda(int i, int j, Spin s, int channel, double value) const;

 private:
  const PairLambdas& pair(int i, int j) const;

  int n_sites_ = 0;
  std::vector<PairLambdas> pairs_;
};

/// Channel partner under i <-> j exchange.
constexpr int swapped_channel(int x) { return x == kFirst ? kSecond : (x == kSecond ? kFirst : x); }

/// Energy denominator of channel x for the hop j -> i.
double channel_denominator(const fock::HubbardParams& p, int i, int j, int channel);

LambdaTable sw_lambdas(const fock::HubbardParams& params);

MatrixOperator build_generator(const LambdaTable& table, fock::BasisPtr basis);

/// ||[S, H0] + V||_F.
double first_order_residual(const MatrixOperator& s, const MatrixOperator& h0,
                            const MatrixOperator& v);

/// Active channel of bond (i, j) seen by an electron of spin `hopping_spin`.
int active_channel(fock::FockState s, int i, int j, Spin hopping_spin);

/// p_x (gamma_ij,s + sign * gamma_ji,s) with the projector on the opposite spin.
MatrixOperator channel_hopping(fock::BasisPtr basis, int i, int j, Spin s, int channel,
                               double reverse_sign);
/// p_x (n_i,s - n_j,s).
MatrixOperator channel_density(fock::BasisPtr basis, int i, int j, Spin s, int channel);
/// gamma_ij,up gamma_ji,down + gamma_ji,up gamma_ij,down.
MatrixOperator exchange_operator(fock::BasisPtr basis, int i, int j);
/// gamma_ij,up gamma_ij,down + gamma_ji,up gamma_ji,down.
MatrixOperator pair_hopping_operator(fock::BasisPtr basis, int i, int j);

}  // namespace swhub::swgen
