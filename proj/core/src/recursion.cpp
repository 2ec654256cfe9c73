// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#include "swhub/recursion.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "swhub/errors.hpp"
#include "swhub/linalg.hpp"

namespace swhub::recursion {

using swgen::kBoth;
using swgen::kEmpty;
using swgen::kFirst;
using swgen::kSecond;

namespace {

constexpr std::size_t idx(int x) { return static_cast<std::size_t>(x); }
constexpr std::size_t sidx(Spin s) { return static_cast<std::size_t>(s); }

void require_two_sites(const swgen::LambdaTable& table) {
  if (table.n_sites() != 2)
    throw std::invalid_argument("recursion relations hold for two sites only, got " +
                                std::to_string(table.n_sites()));
  for (const auto& p : table.pairs())
    if (p.lambda[0] != p.lambda[1])
      throw std::invalid_argument("recursion relations need spin-independent coefficients");
}

/// Decomposition of (T1, T2) onto the two eigenvectors of the channel-1/2
/// recursion: (b, a) with rate (2 alpha)^2 and (a, -b) with rate (4 alpha)^2.
struct Modes {
  double a = 0.0;
  double b = 0.0;
  double w_slow = 0.0;  // 2 alpha
  double w_fast = 0.0;  // 4 alpha
  std::array<double, 2> p_slow{};
  std::array<double, 2> p_fast{};
  bool degenerate = false;
};

Modes decompose(double a, double b, double t1, double t2) {
  Modes m;
  m.a = a;
  m.b = b;
  const double n2 = a * a + b * b;
  if (n2 == 0.0) {
    m.degenerate = true;
    m.p_slow = {t1, t2};
    return m;
  }
  const double alpha = std::sqrt(0.5 * n2);
  m.w_slow = 2.0 * alpha;
  m.w_fast = 4.0 * alpha;
  const double w1 = b * t1 + a * t2;
  const double w2 = a * t1 - b * t2;
  m.p_slow = {w1 * b / n2, w1 * a / n2};
  m.p_fast = {w2 * a / n2, -w2 * b / n2};
  return m;
}

ChannelIntegrals odd_from_even(const std::array<double, 4>& lam, const std::array<double, 4>& t) {
  ChannelIntegrals c;
  for (int x = 0; x < swgen::kChannels; ++x) c.K[idx(x)] = 2.0 * lam[idx(x)] * t[idx(x)];
  c.J = lam[idx(kSecond)] * t[idx(kSecond)] - lam[idx(kFirst)] * t[idx(kFirst)];
  c.L = lam[idx(kFirst)] * t[idx(kSecond)] - lam[idx(kSecond)] * t[idx(kFirst)];
  return c;
}

/// T at even depth 2n.
std::array<double, 4> even_t(const std::array<double, 4>& lam, double t0, int n) {
  std::array<double, 4> t{};
  for (int x : {kEmpty, kBoth}) {
    const double w = 2.0 * lam[idx(x)];
    t[idx(x)] = t0 * std::pow(-w * w, n);
  }
  const Modes m = decompose(lam[idx(kFirst)], lam[idx(kSecond)], t0, t0);
  if (m.degenerate) {
    const double f = n == 0 ? 1.0 : 0.0;
    t[idx(kFirst)] = f * t0;
    t[idx(kSecond)] = f * t0;
    return t;
  }
  const double gs = std::pow(-m.w_slow * m.w_slow, n);
  const double gf = std::pow(-m.w_fast * m.w_fast, n);
  t[idx(kFirst)] = m.p_slow[0] * gs + m.p_fast[0] * gf;
  t[idx(kSecond)] = m.p_slow[1] * gs + m.p_fast[1] * gf;
  return t;
}

double g_t(double w, double theta) { return std::cos(theta * w) - theta * linalg::sinc(theta * w); }

double g_k(double w, double theta) {
  const double s = linalg::sinc(0.5 * theta * w);
  return theta * linalg::sinc(theta * w) - 0.5 * theta * theta * s * s;
}

}  // namespace

IntegralTable::IntegralTable(Kind kind, std::optional<int> order, double theta, int n_sites,
                             std::vector<PairIntegrals> pairs)
    : kind_(kind), order_(order), theta_(theta), n_sites_(n_sites), pairs_(std::move(pairs)) {}

const ChannelIntegrals& IntegralTable::at(int i, int j, Spin s) const {
  for (const auto& p : pairs_)
    if (p.i == i && p.j == j) return p.spin[sidx(s)];
  throw std::out_of_range("IntegralTable: no entry for pair (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
}

std::vector<MatrixOperator> nested_commutator_series(const MatrixOperator& s,
                                                     const MatrixOperator& v, int n_max) {
  if (n_max < 0 || n_max > 40)
    throw std::invalid_argument("nested_commutator_series: n_max must be in [0, 40]");
  std::vector<MatrixOperator> out{v};
  for (int n = 1; n <= n_max; ++n) {
    auto c = commutator(s, out.back());
    out.push_back(c.is_dense() ? MatrixOperator(c.basis_ptr(), c.dense(), false) : c);
  }
  return out;
}

IntegralTable integrals_order(const swgen::LambdaTable& table, int k) {
  if (k < 0) throw std::invalid_argument("integrals_order: negative order");
  require_two_sites(table);
  std::vector<PairIntegrals> pairs;
  for (const auto& p : table.pairs()) {
    PairIntegrals out;
    out.i = p.i;
    out.j = p.j;
    for (Spin s : {Spin::Up, Spin::Down}) {
      const auto& lam = p.lambda[sidx(s)];
      const double t0 = -p.hopping;
      auto& c = out.spin[sidx(s)];
      if (k % 2 == 0) {
        c.T = even_t(lam, t0, k / 2);
      } else {
        c = odd_from_even(lam, even_t(lam, t0, (k - 1) / 2));
      }
    }
    pairs.push_back(out);
  }
  return IntegralTable(IntegralTable::Kind::Order, k, 1.0, table.n_sites(), std::move(pairs));
}

IntegralTable integrals_closed(const swgen::LambdaTable& table, double theta) {
  require_two_sites(table);
  std::vector<PairIntegrals> pairs;
  for (const auto& p : table.pairs()) {
    PairIntegrals out;
    out.i = p.i;
    out.j = p.j;
    for (Spin s : {Spin::Up, Spin::Down}) {
      const auto& lam = p.lambda[sidx(s)];
      const double t0 = -p.hopping;
      auto& c = out.spin[sidx(s)];
      for (int x : {kEmpty, kBoth}) {
        const double w = 2.0 * std::abs(lam[idx(x)]);
        c.T[idx(x)] = t0 * g_t(w, theta);
        c.K[idx(x)] = 2.0 * lam[idx(x)] * t0 * g_k(w, theta);
      }
      const Modes m = decompose(lam[idx(kFirst)], lam[idx(kSecond)], t0, t0);
      if (m.degenerate) {
        c.T[idx(kFirst)] = (1.0 - theta) * t0;
        c.T[idx(kSecond)] = (1.0 - theta) * t0;
        continue;
      }
      const double ts = g_t(m.w_slow, theta);
      const double tf = g_t(m.w_fast, theta);
      const double ks = g_k(m.w_slow, theta);
      const double kf = g_k(m.w_fast, theta);
      c.T[idx(kFirst)] = m.p_slow[0] * ts + m.p_fast[0] * tf;
      c.T[idx(kSecond)] = m.p_slow[1] * ts + m.p_fast[1] * tf;
      c.K[idx(kFirst)] = 2.0 * m.a * (m.p_slow[0] * ks + m.p_fast[0] * kf);
      c.K[idx(kSecond)] = 2.0 * m.b * (m.p_slow[1] * ks + m.p_fast[1] * kf);
      c.L = (m.a * m.p_slow[1] - m.b * m.p_slow[0]) * ks + (m.a * m.p_fast[1] - m.b * m.p_fast[0]) * kf;
      c.J = 0.5 * (c.K[idx(kSecond)] - c.K[idx(kFirst)]);
    }
    pairs.push_back(out);
  }
  return IntegralTable(IntegralTable::Kind::Summed, std::nullopt, theta, table.n_sites(),
                       std::move(pairs));
}

double series_weight(int m, double theta) {
  double w = (m + 1.0 - theta);
  for (int q = 1; q <= m + 1; ++q) w /= q;
  return w * std::pow(theta, m);
}

MatrixOperator reconstruct(const IntegralTable& table, fock::BasisPtr basis) {
  if (basis->n_sites() != table.n_sites())
    throw DimensionError("reconstruct: basis and table site counts differ");
  auto out = MatrixOperator::zero(basis);
  for (const auto& p : table.pairs()) {
    double j_sum = 0.0;
    double l_sum = 0.0;
    for (Spin s : {Spin::Up, Spin::Down}) {
      const auto& c = p.spin[sidx(s)];
      for (int x = 0; x < swgen::kChannels; ++x) {
        if (c.T[idx(x)] != 0.0)
          out = out + c.T[idx(x)] * swgen::channel_hopping(basis, p.i, p.j, s, x, 1.0);
        if (c.K[idx(x)] != 0.0)
          out = out + c.K[idx(x)] * swgen::channel_density(basis, p.i, p.j, s, x);
      }
      j_sum += c.J;
      l_sum += c.L;
    }
    if (j_sum != 0.0) out = out + j_sum * swgen::exchange_operator(basis, p.i, p.j);
    if (l_sum != 0.0) out = out + l_sum * swgen::pair_hopping_operator(basis, p.i, p.j);
  }
  return out;
}

MatrixOperator assemble_hbar(const MatrixOperator& h0, const IntegralTable& summed) {
  if (summed.kind() != IntegralTable::Kind::Summed)
    throw std::invalid_argument("assemble_hbar: table must be summed to infinite order");
  auto h = h0 + reconstruct(summed, h0.basis_ptr());
  if (h.is_dense()) return MatrixOperator(h.basis_ptr(), h.dense(), true);
  return MatrixOperator(h.basis_ptr(), h.sparse(), true);
}

double coupling_norm(const MatrixOperator& hbar, const MatrixOperator& projector) {
  return fock::block_split(hbar, projector).off_diagonal.frobenius_norm();
}

double vv_residual(const swgen::LambdaTable& table, double theta, const MatrixOperator& h0,
                   const MatrixOperator& v, int order_max) {
  if (order_max < 0 || order_max > 20)
    throw std::invalid_argument("vv_residual: order_max must be in [0, 20]");
  const auto g = swgen::build_generator(table, h0.basis_ptr()) * theta;
  const auto parts = fock::block_split(v, fock::heisenberg_projector(h0.basis_ptr()));
  const auto c = vv_coefficients(order_max);
  auto res = commutator(g, h0) + commutator(g, parts.diagonal);
  MatrixOperator term = parts.off_diagonal;
  res = res + c[0] * term;
  for (int n = 1; n <= order_max; ++n) {
    term = commutator(g, commutator(g, term));
    res = res + c[static_cast<std::size_t>(n)] * term;
  }
  return res.frobenius_norm();
}

}  // namespace swhub::recursion
