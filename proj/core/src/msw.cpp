// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#include "swhub/msw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <boost/math/tools/roots.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include "swhub/errors.hpp"
#include "swhub/linalg.hpp"

namespace swhub::msw {

using fock::FockState;
using fock::Spin;
using swgen::kBoth;
using swgen::kEmpty;
using swgen::kFirst;
using swgen::kSecond;

namespace {

constexpr std::size_t idx(int x) { return static_cast<std::size_t>(x); }

class CountingCost {
 public:
  explicit CountingCost(const std::function<double(double)>& f) : f_(f) {}
  double operator()(double x) {
    ++count_;
    const double v = f_(x);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "minimize_theta: non-finite cost " << v << " at theta=" << x;
      throw NumericalError(msg.str());
    }
    return v;
  }
  int count() const { return count_; }

 private:
  const std::function<double(double)>& f_;
  int count_ = 0;
};

/// Brent's method with an absolute tolerance on x.
std::pair<double, double> brent(CountingCost& f, double a, double b, double tol) {
  constexpr double kGold = 0.3819660112501051;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  double x = a + kGold * (b - a);
  double w = x;
  double v = x;
  double fx = f(x);
  double fw = fx;
  double fv = fx;
  double d = 0.0;
  double e = 0.0;
  for (int iter = 0; iter < 500; ++iter) {
    const double xm = 0.5 * (a + b);
    const double tol1 = tol + kEps * std::abs(x);
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - xm) <= tol2 - 0.5 * (b - a)) break;
    bool golden = true;
    if (std::abs(e) > tol1) {
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      const double etemp = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * etemp) && p > q * (a - x) && p < q * (b - x)) {
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = xm - x >= 0 ? tol1 : -tol1;
        golden = false;
      }
    }
    if (golden) {
      e = (x >= xm) ? a - x : b - x;
      d = kGold * e;
    }
    const double u = std::abs(d) >= tol1 ? x + d : x + (d >= 0 ? tol1 : -tol1);
    const double fu = f(u);
    if (fu <= fx) {
      if (u >= x) a = x; else b = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  return {x, fx};
}

Eigen::MatrixXd dense_exp(const MatrixOperator& s, double theta) {
  const Eigen::MatrixXd m = theta * s.to_dense();
  return m.exp();
}

}  // namespace

double theta_analytic(double t, double U) {
  if (!(U > 0.0)) throw std::invalid_argument("theta_analytic: U must be positive");
  if (t == 0.0) throw std::invalid_argument("theta_analytic: t must be nonzero");
  const double x = 4.0 * std::abs(t) / U;
  return std::atan(x) / x;
}

std::string to_string(CostKind kind) {
  switch (kind) {
    case CostKind::EnergyHeisenberg: return "energy-heis";
    case CostKind::EnergyIonic: return "energy-ionic";
    case CostKind::CouplingNorm: return "coupling-norm";
    case CostKind::Custom: return "custom";
  }
  return "custom";
}

VariationalResult minimize_theta(const ThetaCost& cost, Bracket bracket, double tol) {
  if (!(bracket.hi > bracket.lo)) throw std::invalid_argument("minimize_theta: empty bracket");
  if (!cost.value) throw std::invalid_argument("minimize_theta: missing cost");
  CountingCost f(cost.value);
  VariationalResult res;
  res.cost_kind = cost.kind;
  res.ionic_alpha = cost.ionic_alpha;

  constexpr int kGrid = 24;
  std::vector<double> xs(kGrid + 1);
  std::vector<double> fs(kGrid + 1);
  const double h = (bracket.hi - bracket.lo) / kGrid;
  for (int k = 0; k <= kGrid; ++k) {
    xs[idx(k)] = bracket.lo + h * k;
    fs[idx(k)] = f(xs[idx(k)]);
  }
  const auto [mn, mx] = std::minmax_element(fs.begin(), fs.end());
  const double scale = std::max(1.0, std::max(std::abs(*mn), std::abs(*mx)));
  if (*mx - *mn <= 64.0 * std::numeric_limits<double>::epsilon() * scale) {
    res.theta_star = 0.5 * (bracket.lo + bracket.hi);
    res.value = f(res.theta_star);
    res.degenerate = true;
    res.n_evals = f.count();
    return res;
  }
  const int kbest = static_cast<int>(mn - fs.begin());
  const double lo = xs[idx(std::max(kbest - 1, 0))];
  const double hi = xs[idx(std::min(kbest + 1, kGrid))];
  auto [x, fx] = brent(f, lo, hi, tol);
  if (fs[idx(kbest)] < fx) {
    x = xs[idx(kbest)];
    fx = fs[idx(kbest)];
  }

  if (cost.slope) {
    // Pin a smooth interior minimum as the zero of the derivative.
    double step = std::max(1e-6, 1e3 * tol);
    double a = std::max(bracket.lo, x - step);
    double b = std::min(bracket.hi, x + step);
    double ga = cost.slope(a);
    double gb = cost.slope(b);
    for (int grow = 0; grow < 6 && ga * gb > 0.0; ++grow) {
      step *= 10.0;
      a = std::max(bracket.lo, x - step);
      b = std::min(bracket.hi, x + step);
      ga = cost.slope(a);
      gb = cost.slope(b);
    }
    if (ga < 0.0 && gb > 0.0) {
      boost::uintmax_t iters = 200;
      auto term = [tol](double l, double r) { return std::abs(r - l) <= 0.01 * tol; };
      auto root = boost::math::tools::toms748_solve(cost.slope, a, b, ga, gb, term, iters);
      const double xr = 0.5 * (root.first + root.second);
      const double fr = f(xr);
      if (fr <= fx + 64.0 * std::numeric_limits<double>::epsilon() * scale) {
        x = xr;
        fx = fr;
      }
    }
  }

  res.theta_star = x;
  res.value = fx;
  res.n_evals = f.count();
  const double edge_tol = 10.0 * tol + 1e-12;
  res.at_bracket_edge = x - bracket.lo <= edge_tol || bracket.hi - x <= edge_tol;
  return res;
}

Eigen::VectorXd trial_state(const fock::Basis& basis, TrialKind kind, double alpha) {
  if (basis.n_sites() != 2) throw DimensionError("trial_state: dimer basis required");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis.size()));
  auto at = [&basis](std::uint64_t bits) {
    return static_cast<Eigen::Index>(basis.index(FockState{bits}));
  };
  // Bit q is qubit q; ket "1001" has orbitals 0 and 3 occupied.
  const double r = std::numbers::sqrt2 / 2.0;
  switch (kind) {
    case TrialKind::Heisenberg:
      v[at(0b1001)] = r;
      v[at(0b0110)] = -r;
      break;
    case TrialKind::HeisenbergAlias:
      v[at(0b1001)] = r;
      v[at(0b0110)] = r;
      break;
    case TrialKind::Ionic:
      v[at(0b0011)] = std::cos(alpha);
      v[at(0b1100)] = std::sin(alpha);
      break;
  }
  return v;
}

MatrixOperator transformed_hamiltonian(const MatrixOperator& s, const MatrixOperator& h,
                                       double theta) {
  const Eigen::MatrixXd u = dense_exp(s, theta);
  Eigen::MatrixXd m = u * h.to_dense() * u.transpose();
  m = 0.5 * (m + m.transpose()).eval();
  return MatrixOperator(h.basis_ptr(), std::move(m), true);
}

Eigen::VectorXd apply_inverse_transform(const MatrixOperator& s, double theta,
                                        const Eigen::VectorXd& phi) {
  if (s.basis().n_sites() == 2 || s.dim() <= 64) return dense_exp(s, -theta) * phi;
  auto res = linalg::expmv([&s](const Eigen::VectorXd& v) { return s.apply(v); }, -theta, phi);
  return res.vector;
}

ThetaCost cost_energy(const swgen::LambdaTable& table, const Eigen::VectorXd& trial,
                      const MatrixOperator& h, CostKind kind, double ionic_alpha) {
  if (trial.size() != h.dim()) throw DimensionError("cost_energy: trial state size mismatch");
  if (std::abs(trial.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("cost_energy: trial state is not normalized");
  auto s = std::make_shared<MatrixOperator>(swgen::build_generator(table, h.basis_ptr()));
  auto hp = std::make_shared<MatrixOperator>(h);
  auto phi = std::make_shared<Eigen::VectorXd>(trial);
  ThetaCost c;
  c.kind = kind;
  c.ionic_alpha = ionic_alpha;
  c.value = [s, hp, phi](double theta) {
    const Eigen::VectorXd psi = apply_inverse_transform(*s, theta, *phi);
    return hp->expectation(psi);
  };
  c.slope = [s, hp, phi](double theta) {
    const Eigen::VectorXd psi = apply_inverse_transform(*s, theta, *phi);
    return 2.0 * psi.dot(s->apply(hp->apply(psi)));
  };
  return c;
}

ThetaCost cost_coupling(const swgen::LambdaTable& table, const fock::HubbardSplit& h,
                        HbarRoute route) {
  auto basis = h.h0.basis_ptr();
  auto p = std::make_shared<MatrixOperator>(fock::heisenberg_projector(basis));
  ThetaCost c;
  c.kind = CostKind::CouplingNorm;
  if (route == HbarRoute::ClosedForm) {
    auto h0 = std::make_shared<MatrixOperator>(h.h0);
    c.value = [table, h0, p](double theta) {
      return recursion::coupling_norm(
          recursion::assemble_hbar(*h0, recursion::integrals_closed(table, theta)), *p);
    };
    return c;
  }
  auto s = std::make_shared<MatrixOperator>(swgen::build_generator(table, basis));
  auto total = std::make_shared<MatrixOperator>(h.total());
  c.value = [s, total, p](double theta) {
    return recursion::coupling_norm(transformed_hamiltonian(*s, *total, theta), *p);
  };
  return c;
}

ChannelFit fit_channels(const MatrixOperator& op) {
  const auto basis = op.basis_ptr();
  if (basis->n_sites() != 2) throw DimensionError("fit_channels: dimer operator required");
  std::vector<MatrixOperator> cols;
  for (Spin s : {Spin::Up, Spin::Down})
    for (int x = 0; x < swgen::kChannels; ++x)
      cols.push_back(swgen::channel_hopping(basis, 0, 1, s, x, 1.0));
  for (Spin s : {Spin::Up, Spin::Down})
    for (int x = 0; x < swgen::kChannels; ++x)
      cols.push_back(swgen::channel_density(basis, 0, 1, s, x));
  cols.push_back(swgen::exchange_operator(basis, 0, 1));
  cols.push_back(swgen::pair_hopping_operator(basis, 0, 1));

  const Eigen::Index n = op.dim();
  Eigen::MatrixXd a(n * n, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Eigen::MatrixXd d = cols[k].to_dense();
    a.col(static_cast<Eigen::Index>(k)) = Eigen::Map<const Eigen::VectorXd>(d.data(), n * n);
  }
  const Eigen::MatrixXd target = op.to_dense();
  const Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(target.data(), n * n);
  // K_1, K_2 have a null direction across spins; the minimum-norm solution is the spin-symmetric one.
  const Eigen::VectorXd c = a.completeOrthogonalDecomposition().solve(y);

  ChannelFit fit;
  for (int s = 0; s < 2; ++s) {
    auto& ci = fit.spin[idx(s)];
    for (int x = 0; x < swgen::kChannels; ++x) {
      ci.T[idx(x)] = c[4 * s + x];
      ci.K[idx(x)] = c[8 + 4 * s + x];
    }
    ci.J = 0.5 * c[16];
    ci.L = 0.5 * c[17];
  }
  fit.residual = (a * c - y).norm();
  return fit;
}

std::optional<swgen::LambdaTable> update_lambdas(const fock::HubbardParams& p,
                                                 const ChannelFit& fit, std::string* why) {
  const double dmu = p.mu[0] - p.mu[1];
  const double u0 = p.U[0];
  const double u1 = p.U[1];
  const double scale = std::max({1.0, std::abs(dmu), std::abs(u0), std::abs(u1)});
  const double zero = 1e-12 * scale;
  swgen::PairLambdas out;
  out.i = 0;
  out.j = 1;
  out.hopping = p.t(0, 1);
  for (int s = 0; s < 2; ++s) {
    const auto& c = fit.spin[idx(s)];
    auto& lam = out.lambda[idx(s)];
    // Channels 0 and 3 never couple P and Q on two sites; resonant ones stay unrotated.
    const double d0 = dmu + 2.0 * c.K[idx(kEmpty)];
    const double d3 = dmu + (u0 - u1) + 2.0 * c.K[idx(kBoth)];
    lam[idx(kEmpty)] = std::abs(d0) <= zero ? 0.0 : c.T[idx(kEmpty)] / d0;
    lam[idx(kBoth)] = std::abs(d3) <= zero ? 0.0 : c.T[idx(kBoth)] / d3;

    const double t1 = c.T[idx(kFirst)];
    const double t2 = c.T[idx(kSecond)];
    const double k1 = c.K[idx(kFirst)];
    const double k2 = c.K[idx(kSecond)];
    const double b1 = (dmu + u0) + 3.0 * k1 - k2 + 2.0 * c.J;
    const double b2 = (dmu - u1) + 3.0 * k2 - k1 - 2.0 * c.J;
    const double den = 4.0 * c.L * c.L + b1 * b2;
    if (std::abs(den) <= zero * zero) {
      if (std::abs(t1) + std::abs(t2) > 1e-14) {
        if (why) *why = "vanishing denominator 4L^2 + B1 B2 in the coupled channels";
        return std::nullopt;
      }
      lam[idx(kFirst)] = 0.0;
      lam[idx(kSecond)] = 0.0;
      continue;
    }
    lam[idx(kFirst)] = (2.0 * t2 * c.L + t1 * b2) / den;
    lam[idx(kSecond)] = (-2.0 * t1 * c.L + t2 * b1) / den;
  }
  return swgen::LambdaTable(2, {out});
}

IterationTrace iterate_sw(const fock::HubbardParams& params, int max_iter, double tol) {
  params.validate();
  if (params.n_sites != 2) throw std::invalid_argument("iterate_sw: dimer parameters required");
  if (max_iter < 0) throw std::invalid_argument("iterate_sw: max_iter must be >= 0");
  auto basis = fock::build_full_basis(2);
  const auto split = fock::build_hubbard(params, basis);
  const auto p = fock::heisenberg_projector(basis);
  const auto h_full = split.total();

  IterationTrace trace;
  auto lambdas = swgen::sw_lambdas(params);
  MatrixOperator current = h_full;
  for (int s = 0; s <= max_iter; ++s) {
    const auto gen = swgen::build_generator(lambdas, basis);
    current = transformed_hamiltonian(gen, current, 1.0);
    IterationStep step{s, lambdas, current, fit_channels(current - split.h0),
                       recursion::coupling_norm(current, p)};
    trace.steps.push_back(std::move(step));
    if (trace.steps.back().coupling_norm <= tol) {
      trace.converged = true;
      break;
    }
    if (s == max_iter) break;
    std::string why;
    auto next = update_lambdas(params, trace.steps.back().integrals, &why);
    if (!next) {
      trace.halted = true;
      trace.halt_reason = why;
      break;
    }
    lambdas = *next;
  }
  return trace;
}

std::vector<double> singlet_spectrum(const MatrixOperator& h) {
  const auto s2 = fock::spin_squared(h.basis_ptr()).to_dense();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es2(s2);
  std::vector<Eigen::Index> cols;
  for (Eigen::Index k = 0; k < es2.eigenvalues().size(); ++k)
    if (std::abs(es2.eigenvalues()[k]) < 1e-8) cols.push_back(k);
  Eigen::MatrixXd z(h.dim(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k)
    z.col(static_cast<Eigen::Index>(k)) = es2.eigenvectors().col(cols[k]);
  const Eigen::MatrixXd hs = z.transpose() * h.to_dense() * z;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hs);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  return out;
}

}  // namespace swhub::msw
