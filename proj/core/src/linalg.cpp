// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#include "swhub/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "swhub/errors.hpp"

namespace swhub::linalg {

double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

std::vector<RitzPair> lanczos_lowest(const LinearMap& op, Eigen::Index dim, int k,
                                     const LanczosOptions& opts) {
  if (k < 1 || k > dim) throw std::invalid_argument("lanczos_lowest: bad k");
  const int m_max = static_cast<int>(std::min<Eigen::Index>(opts.max_iter, dim));

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd q(dim);
  for (Eigen::Index i = 0; i < dim; ++i) q[i] = gauss(rng);
  q.normalize();

  Eigen::MatrixXd basis(dim, m_max);
  std::vector<double> alpha;
  std::vector<double> beta;
  alpha.reserve(static_cast<std::size_t>(m_max));
  beta.reserve(static_cast<std::size_t>(m_max));

  auto ritz = [&](int m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
    Eigen::VectorXd off(std::max(m - 1, 0));
    for (int i = 0; i + 1 < m; ++i) off[i] = beta[static_cast<std::size_t>(i)];
    es.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
    return es;
  };

  for (int j = 0; j < m_max; ++j) {
    basis.col(j) = q;
    Eigen::VectorXd w = op(q);
    const double a = q.dot(w);
    alpha.push_back(a);
    // Full reorthogonalization, applied twice for stability.
    for (int pass = 0; pass < 2; ++pass) {
      const auto block = basis.leftCols(j + 1);
      w -= block * (block.transpose() * w);
    }
    const double b = w.norm();
    beta.push_back(b);
    const int m = j + 1;
    const bool breakdown = b < 1e-14 * std::max(1.0, std::abs(a));
    const bool last = m == m_max;
    if (m >= k && (breakdown || last || m % 5 == 0)) {
      auto es = ritz(m);
      bool ok = true;
      for (int i = 0; i < k; ++i) {
        const double est = breakdown ? 0.0 : std::abs(b * es.eigenvectors()(m - 1, i));
        if (est > 0.1 * opts.tol) ok = false;
      }
      if (ok || breakdown || last) {
        std::vector<RitzPair> out;
        for (int i = 0; i < k; ++i) {
          RitzPair rp;
          rp.value = es.eigenvalues()[i];
          rp.vector = basis.leftCols(m) * es.eigenvectors().col(i);
          rp.vector.normalize();
          rp.residual = (op(rp.vector) - rp.value * rp.vector).norm();
          out.push_back(std::move(rp));
        }
        bool converged = true;
        for (const auto& rp : out)
          if (rp.residual > opts.tol) converged = false;
        if (converged) return out;
        if (breakdown || last)
          throw NumericalError("lanczos_lowest: no convergence after " + std::to_string(m) +
                               " iterations (residual " + std::to_string(out.back().residual) +
                               ")");
      }
    }
    q = w / b;
  }
  throw NumericalError("lanczos_lowest: iteration limit reached");
}

ExpmvResult expmv(const LinearMap& a, double tau, const Eigen::VectorXd& v,
                  const ExpmvOptions& opts) {
  ExpmvResult res;
  const double beta = v.norm();
  if (beta == 0.0 || tau == 0.0) {
    res.vector = v;
    return res;
  }
  const Eigen::Index n = v.size();
  const int m_max = static_cast<int>(std::min<Eigen::Index>(opts.max_dim, n));
  Eigen::MatrixXd vk(n, m_max + 1);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m_max + 1, m_max);
  vk.col(0) = v / beta;

  for (int j = 0; j < m_max; ++j) {
    Eigen::VectorXd w = a(vk.col(j));
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i <= j; ++i) {
        const double c = vk.col(i).dot(w);
        h(i, j) += c;
        w -= c * vk.col(i);
      }
    }
    const double hn = w.norm();
    h(j + 1, j) = hn;
    const int m = j + 1;
    const Eigen::MatrixXd hm = tau * h.topLeftCorner(m, m);
    const Eigen::MatrixXd e = hm.exp();
    const double err = beta * hn * std::abs(tau) * std::abs(e(m - 1, 0));
    const bool happy = hn < 1e-14;
    if (happy || err < opts.tol) {
      res.vector = beta * (vk.leftCols(m) * e.col(0));
      res.krylov_dim = m;
      res.error_estimate = happy ? 0.0 : err;
      return res;
    }
    vk.col(j + 1) = w / hn;
  }
  throw NumericalError("expmv: Krylov subspace did not converge within " +
                       std::to_string(m_max) + " vectors");
}

}  // namespace swhub::linalg
