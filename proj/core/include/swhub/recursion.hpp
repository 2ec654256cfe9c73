// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "swhub/fock.hpp"
#include "swhub/matrix_operator.hpp"
#include "swhub/swgen.hpp"

namespace swhub::recursion {

using fock::Spin;

/// Coefficients of one bond and hopping spin in the channel-operator expansion
///   sum_x T_x p_x (g_ij + g_ji) + K_x p_x (n_i - n_j)  +  J X_J + L X_L
/// where X_J and X_L are shared by both spins (each spin carries half).
struct ChannelIntegrals {
  std::array<double, swgen::kChannels> T{};
  std::array<double, swgen::kChannels> K{};
  double J = 0.0;
  double L = 0.0;
};

struct PairIntegrals {
  int i = 0;
  int j = 0;
  std::array<ChannelIntegrals, 2> spin{};  // indexed by Spin
};

class IntegralTable {
 public:
  enum class Kind { Order, Summed };

  IntegralTable(Kind kind, std::optional<int> order, double theta, int n_sites,
                std::vector<PairIntegrals> pairs);

  Kind kind() const { return kind_; }
  /// Commutator depth k for Kind::Order.
  std::optional<int> order() const { return order_; }
  double theta() const { return theta_; }
  int n_sites() const { return n_sites_; }
  std::span<const PairIntegrals> pairs() const { return pairs_; }
  /// Requires i < j.
  const ChannelIntegrals& at(int i, int j, Spin s) const;

 private:
  Kind kind_;
  std::optional<int> order_;
  double theta_;
  int n_sites_;
  std::vector<PairIntegrals> pairs_;
};

/// Element n is the n-fold nested commutator [S, [S, ... [S, V]]].
std::vector<MatrixOperator> nested_commutator_series(const MatrixOperator& s,
                                                     const MatrixOperator& v, int n_max);

/// Integrals of the depth-k commutator, from the two-site recursions.
IntegralTable integrals_order(const swgen::LambdaTable& table, int k);

/// Infinite-order sums of the theta-scaled transformation.
IntegralTable integrals_closed(const swgen::LambdaTable& table, double theta);

/// Weight of the depth-m commutator in exp(theta S) H exp(-theta S) - H0,
/// theta^m (m + 1 - theta) / (m + 1)!.
double series_weight(int m, double theta);

/// Channel-operator expansion encoded by a table (no H0 part).
MatrixOperator reconstruct(const IntegralTable& table, fock::BasisPtr basis);

/// H0 plus the expansion of a summed table, on H0's basis.
MatrixOperator assemble_hbar(const MatrixOperator& h0, const IntegralTable& summed);

/// ||P O Q + Q O P||_F.
double coupling_norm(const MatrixOperator& hbar, const MatrixOperator& projector);

/// Exact rationals B_0, B_2, ..., B_{2 n_max} converted to double.
std::vector<double> bernoulli_even(int n_max);

/// c_n = 2^{2n} B_{2n} / (2n)!, n = 0..n_max.
std::vector<double> vv_coefficients(int n_max);

/// || [G, H0] + [G, V_D] + sum_{n <= order_max} c_n G^{2n}(V_X) ||_F with G = theta S.
double vv_residual(const swgen::LambdaTable& table, double theta, const MatrixOperator& h0,
                   const MatrixOperator& v, int order_max);

}  // namespace swhub::recursion
