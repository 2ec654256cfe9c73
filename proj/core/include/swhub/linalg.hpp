// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace swhub::linalg {

using LinearMap = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

struct LanczosOptions {
  double tol = 1e-10;
  int max_iter = 500;
  unsigned long long seed = 0x5eed5eedULL;
};

struct RitzPair {
  double value = 0.0;
  Eigen::VectorXd vector;
  double residual = 0.0;
};

/// k lowest eigenpairs of a symmetric map via Lanczos with full reorthogonalization.
/// Throws NumericalError when the residuals do not reach tol within max_iter steps.
std::vector<RitzPair> lanczos_lowest(const LinearMap& op, Eigen::Index dim, int k,
                                     const LanczosOptions& opts = {});

struct ExpmvOptions {
  double tol = 1e-10;
  int max_dim = 200;
};

struct ExpmvResult {
  Eigen::VectorXd vector;
  int krylov_dim = 0;
  double error_estimate = 0.0;
};

/// exp(tau A) v via Arnoldi; the Krylov dimension grows until the a posteriori
/// error estimate drops below tol. Throws NumericalError beyond max_dim.
ExpmvResult expmv(const LinearMap& a, double tau, const Eigen::VectorXd& v,
                  const ExpmvOptions& opts = {});

/// Unnormalized sinc with sinc(0) = 1.
double sinc(double x);

}  // namespace swhub::linalg
