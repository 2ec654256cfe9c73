// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#include "swhub/cli/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>

#include "swhub/errors.hpp"
#include "swhub/fock.hpp"
#include "swhub/msw.hpp"
#include "swhub/qsim/circuit.hpp"
#include "swhub/qsim/estimator.hpp"
#include "swhub/qsim/simulator.hpp"
#include "swhub/qsim/vqe.hpp"
#include "swhub/rings.hpp"
#include "swhub/swgen.hpp"

#ifndef SWHUB_VERSION
#define SWHUB_VERSION "0.0.0"
#endif

namespace swhub::cli {

namespace fs = std::filesystem;
using qsim::StateKind;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t[]\"");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t[]\"");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& tok, const char* name) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || !std::isfinite(v))
    throw ConfigError(std::string(name) + ": not a finite number: '" + tok + "'");
  return v;
}

/// Resolved configuration in the syntax accepted by --config.
class Snapshot {
 public:
  Snapshot(const Common& c, Backend backend, const std::string& command) {
    text_ += "# swhub " SWHUB_VERSION " resolved configuration\n";
    text_ += "seed = " + std::to_string(c.seed) + "\n";
    text_ += "backend = " + to_string(backend) + "\n";
    text_ += "\n[" + command + "]\n";
  }
  void text(const char* key, const std::string& v) { line(key, v); }
  void num(const char* key, double v) { line(key, format_double(v)); }
  void integer(const char* key, long long v) { line(key, std::to_string(v)); }
  void flag(const char* key, bool v) { line(key, format_bool(v)); }
  template <class T>
  void list(const char* key, const std::vector<T>& vs) {
    std::string s = "[";
    for (std::size_t k = 0; k < vs.size(); ++k) {
      if (k) s += ", ";
      if constexpr (std::is_same_v<T, std::string>)
        s += vs[k];
      else if constexpr (std::is_integral_v<T>)
        s += std::to_string(vs[k]);
      else
        s += format_double(vs[k]);
    }
    line(key, s + "]");
  }
  const std::string& str() const { return text_; }

 private:
  void line(const char* key, const std::string& v) { text_ += std::string(key) + " = " + v + "\n"; }
  std::string text_;
};

Backend resolve_backend(const Common& c, Backend fallback) {
  return c.backend.empty() ? fallback : parse_backend(c.backend);
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

void check_common(const Common& c) { require(c.jobs >= 1, "--jobs must be >= 1"); }

void check_noise(int shots, double l1, double l2) {
  require(shots >= 1, "shots must be >= 1");
  require(l1 >= 0.0 && l1 <= 1.0, "lambda1 must lie in [0, 1]");
  require(l2 >= 0.0 && l2 <= 1.0, "lambda2 must lie in [0, 1]");
}

std::string u_label(double u) { return "u_over_t=" + format_double(u); }

std::string optional_field(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

msw::Bracket checked_bracket(double lo, double hi) {
  require(std::isfinite(lo) && std::isfinite(hi) && lo < hi, "bracket_lo must be < bracket_hi");
  return {lo, hi};
}

// Energies and spin of the dimer trial states after exp(-theta S).
struct DimerPoint {
  double theta = 0.0;
  double e_heis = 0.0;
  double e_ionic = 0.0;
  double coupling = 0.0;
  double s2 = 0.0;
};

struct DimerVarSetup {
  double t = 1.0;
  double delta_mu = 0.0;
  std::string cost;
  double alpha = 0.0;
  msw::Bracket bracket;
  Backend backend = Backend::Exact;
  qsim::NoiseModel noise;
};

DimerPoint run_dimer_var(const DimerVarSetup& s, double u) {
  const auto params = fock::HubbardParams::dimer_gauge(s.t, u * s.t, s.delta_mu * s.t);
  auto basis = fock::build_basis(2, 1, 1);
  const auto split = fock::build_hubbard(params, basis);
  const auto h = split.total();
  const auto table = swgen::sw_lambdas(params);
  const auto coupling = msw::cost_coupling(table, split);

  if (s.backend == Backend::Exact) {
    const auto heis = msw::cost_energy(table, msw::trial_state(*basis, msw::TrialKind::Heisenberg),
                                       h, msw::CostKind::EnergyHeisenberg);
    const auto ionic =
        msw::cost_energy(table, msw::trial_state(*basis, msw::TrialKind::Ionic, s.alpha), h,
                         msw::CostKind::EnergyIonic, s.alpha);
    const auto gen = swgen::build_generator(table, basis);
    const auto s2 = fock::spin_squared(basis);
    const auto phi = msw::trial_state(*basis, msw::TrialKind::Heisenberg);
    auto finish = [&](double th) {
      return DimerPoint{th, heis.value(th), ionic.value(th), coupling.value(th),
                        s2.expectation(msw::apply_inverse_transform(gen, th, phi))};
    };
    if (s.cost == "energy") return finish(msw::minimize_theta(heis, s.bracket).theta_star);
    if (s.cost == "ionic") return finish(msw::minimize_theta(ionic, s.bracket).theta_star);
    return finish(msw::minimize_theta(coupling, s.bracket).theta_star);
  }

  const qsim::DimerQubitModel model(params);
  const bool noisy = s.backend == Backend::Noisy;
  auto simulate = [&](StateKind kind, double alpha, double th) {
    const auto c = qsim::variational_circuit(model.generator, kind, alpha, th);
    return noisy ? qsim::run_density(c, s.noise)
                 : qsim::DensityState::pure(qsim::run_statevector(c));
  };
  // energy(theta) of the trial states on the circuit backend
  std::function<double(double)> e_heis = [&](double th) {
    return qsim::exact_expectation(simulate(StateKind::Heisenberg, 0.0, th), model.hamiltonian);
  };
  std::function<double(double)> e_ionic = [&](double th) {
    return qsim::exact_expectation(simulate(StateKind::Ionic, s.alpha, th), model.hamiltonian);
  };

  msw::ThetaCost cost = coupling;
  if (s.cost != "coupling") {
    cost.kind = s.cost == "energy" ? msw::CostKind::EnergyHeisenberg : msw::CostKind::EnergyIonic;
    cost.value = s.cost == "energy" ? e_heis : e_ionic;
    cost.slope = nullptr;
  }
  DimerPoint p;
  p.theta = msw::minimize_theta(cost, s.bracket).theta_star;
  p.coupling = coupling.value(p.theta);
  const auto rho_h = simulate(StateKind::Heisenberg, 0.0, p.theta);
  const auto rho_i = simulate(StateKind::Ionic, s.alpha, p.theta);
  auto rng = qsim::make_stream(s.noise.seed, qsim::kShotStream);
  const auto shots = noisy ? s.noise.shots : std::nullopt;
  p.e_heis = qsim::estimate_expectation(rho_h, model.hamiltonian, shots, rng);
  p.e_ionic = qsim::estimate_expectation(rho_i, model.hamiltonian, shots, rng);
  p.s2 = qsim::exact_expectation(rho_h, model.spin_squared);
  return p;
}

}  // namespace

std::string to_string(Backend b) {
  switch (b) {
    case Backend::Exact: return "exact";
    case Backend::Statevector: return "statevector";
    case Backend::Noisy: return "noisy";
  }
  return "?";
}

Backend parse_backend(const std::string& s) {
  if (s == "exact") return Backend::Exact;
  if (s == "statevector") return Backend::Statevector;
  if (s == "noisy") return Backend::Noisy;
  throw ConfigError("unknown backend '" + s + "' (exact, statevector, noisy)");
}

std::vector<double> parse_grid(const std::vector<std::string>& tokens, const char* name) {
  std::vector<double> out;
  for (const auto& raw : tokens) {
    const auto tok = trim(raw);
    if (!tok.empty()) out.push_back(parse_double(tok, name));
  }
  return out;
}

std::vector<int> parse_int_grid(const std::vector<std::string>& tokens, const char* name) {
  std::vector<int> out;
  for (double v : parse_grid(tokens, name)) {
    if (v != std::floor(v) || std::abs(v) > 1e6)
      throw ConfigError(std::string(name) + ": not an integer: " + format_double(v));
    out.push_back(static_cast<int>(v));
  }
  return out;
}

double resolve_ionic_alpha(const std::string& token, double delta_mu) {
  const auto tok = trim(token);
  if (tok == "auto") return delta_mu == 0.0 ? -std::numbers::pi / 4 : 0.0;
  return parse_double(tok, "ionic_alpha");
}

Plan plan_dimer_var(const Common& common, const DimerVarOptions& o) {
  check_common(common);
  const auto grid = parse_grid(o.u_over_t, "u_over_t");
  for (double u : grid) require(u > 0.0, "u_over_t values must be positive");
  require(o.t != 0.0 && std::isfinite(o.t), "t must be nonzero");
  require(std::isfinite(o.delta_mu), "delta_mu must be finite");
  require(o.cost == "energy" || o.cost == "ionic" || o.cost == "coupling",
          "cost must be energy, ionic or coupling");

  DimerVarSetup s;
  s.t = o.t;
  s.delta_mu = o.delta_mu;
  s.cost = o.cost;
  s.alpha = resolve_ionic_alpha(o.ionic_alpha, o.delta_mu);
  s.bracket = checked_bracket(o.bracket_lo, o.bracket_hi);
  s.backend = resolve_backend(common, Backend::Exact);
  if (s.backend == Backend::Noisy) {
    check_noise(o.shots, o.lambda1, o.lambda2);
    s.noise = {o.lambda1, o.lambda2, o.shots, common.seed};
  }
  s.noise.seed = common.seed;

  Snapshot snap(common, s.backend, "dimer-var");
  snap.list("u_over_t", grid);
  snap.num("delta_mu", o.delta_mu);
  snap.num("t", o.t);
  snap.text("cost", o.cost);
  snap.num("ionic_alpha", s.alpha);
  snap.num("bracket_lo", s.bracket.lo);
  snap.num("bracket_hi", s.bracket.hi);
  snap.integer("shots", o.shots);
  snap.num("lambda1", o.lambda1);
  snap.num("lambda2", o.lambda2);

  Plan plan;
  plan.name = "dimer-var";
  plan.config_text = snap.str();
  plan.header = {"u_over_t", "delta_mu_over_t", "theta_star",    "E_heis", "E_ionic", "E0_exact",
                 "E1_exact", "coupling_norm",   "s2",            "backend", "seed"};
  plan.n_points = grid.size();
  plan.label = [grid](std::size_t k) { return u_label(grid[k]); };
  plan.point = [grid, s, seed = common.seed](std::size_t k) {
    const double u = grid[k];
    const auto p = run_dimer_var(s, u);
    const auto params = fock::HubbardParams::dimer_gauge(s.t, u * s.t, s.delta_mu * s.t);
    const auto spec =
        msw::singlet_spectrum(fock::build_hubbard(params, fock::build_basis(2, 1, 1)).total());
    PointResult r;
    r.rows.push_back({format_double(u), format_double(s.delta_mu), format_double(p.theta),
                      format_double(p.e_heis), format_double(p.e_ionic), format_double(spec.at(0)),
                      format_double(spec.at(1)), format_double(p.coupling), format_double(p.s2),
                      to_string(s.backend), std::to_string(seed)});
    return r;
  };
  return plan;
}

Plan plan_dimer_iter(const Common& common, const DimerIterOptions& o) {
  check_common(common);
  const auto grid = parse_grid(o.u_over_t, "u_over_t");
  for (double u : grid) require(u > 0.0, "u_over_t values must be positive");
  require(o.t != 0.0 && std::isfinite(o.t), "t must be nonzero");
  require(std::isfinite(o.delta_mu), "delta_mu must be finite");
  require(o.n_iters >= 0, "n_iters must be >= 0");
  require(o.tol >= 0.0, "tol must be >= 0");
  const auto backend = resolve_backend(common, Backend::Exact);
  require(backend != Backend::Noisy, "dimer-iter supports the exact and statevector backends");
  const bool trotterized = o.trotterized || backend == Backend::Statevector;
  const double alpha = resolve_ionic_alpha(o.ionic_alpha, o.delta_mu);

  Snapshot snap(common, backend, "dimer-iter");
  snap.list("u_over_t", grid);
  snap.num("delta_mu", o.delta_mu);
  snap.num("t", o.t);
  snap.integer("n_iters", o.n_iters);
  snap.num("tol", o.tol);
  snap.flag("trotterized", trotterized);
  snap.num("ionic_alpha", alpha);

  Plan plan;
  plan.name = "dimer-iter";
  plan.config_text = snap.str();
  plan.header = {"u_over_t", "delta_mu_over_t", "n_iters",    "coupling_norm_final",
                 "E_heis",   "E_ionic",         "J_final",    "trotterized",
                 "E_heis_trotter", "E_ionic_trotter"};
  plan.n_points = grid.size();
  plan.label = [grid](std::size_t k) { return u_label(grid[k]); };
  plan.point = [grid, o, alpha, trotterized](std::size_t k) {
    const double u = grid[k];
    const auto params = fock::HubbardParams::dimer_gauge(o.t, u * o.t, o.delta_mu * o.t);
    const auto trace = msw::iterate_sw(params, o.n_iters, o.tol);
    const auto& last = trace.steps.back();
    const auto& basis = last.hbar.basis();
    const double eh = last.hbar.expectation(msw::trial_state(basis, msw::TrialKind::Heisenberg));
    const double ei =
        last.hbar.expectation(msw::trial_state(basis, msw::TrialKind::Ionic, alpha));
    std::optional<double> th, ti;
    if (trotterized) {
      const auto te = qsim::iterative_trotter_energies(trace, params, alpha);
      th = te.e_heis;
      ti = te.e_ionic;
    }
    PointResult r;
    r.rows.push_back({format_double(u), format_double(o.delta_mu), std::to_string(last.s),
                      format_double(last.coupling_norm), format_double(eh), format_double(ei),
                      format_double(last.integrals.spin[0].J), format_bool(trotterized),
                      optional_field(th), optional_field(ti)});
    if (trace.halted) {
      r.failure = u_label(u) + ": stopped after s=" + std::to_string(last.s) + ": " +
                  trace.halt_reason;
      r.exit_code = kExitNumerical;
    }
    return r;
  };
  return plan;
}

Plan plan_ring_sweep(const Common& common, const RingSweepOptions& o) {
  check_common(common);
  const auto ns = parse_int_grid(o.n_sites, "n_sites");
  const auto us = parse_grid(o.u_over_t, "u_over_t");
  for (int n : ns) {
    require(n >= 2 && n <= rings::kMaxSites,
            "n_sites must lie in [2, " + std::to_string(rings::kMaxSites) + "], got " +
                std::to_string(n));
    require(n % 2 == 0, "n_sites must be even, got " + std::to_string(n));
  }
  for (double u : us) require(u > 0.0, "u_over_t values must be positive");
  require(o.t > 0.0 && std::isfinite(o.t), "t must be positive");
  std::vector<rings::ThetaMode> modes;
  std::vector<std::string> mode_names;
  for (const auto& raw : o.modes) {
    const auto m = trim(raw);
    if (m.empty()) continue;
    if (m == "fixed-1")
      modes.push_back(rings::ThetaMode::Fixed1);
    else if (m == "optimized")
      modes.push_back(rings::ThetaMode::Optimized);
    else
      throw ConfigError("modes: expected fixed-1 or optimized, got '" + m + "'");
    mode_names.push_back(m);
  }
  const auto bracket = checked_bracket(o.bracket_lo, o.bracket_hi);
  const auto backend = resolve_backend(common, Backend::Exact);
  require(backend == Backend::Exact, "ring-sweep supports the exact backend only");

  Snapshot snap(common, backend, "ring-sweep");
  snap.list("n_sites", ns);
  snap.list("u_over_t", us);
  snap.list("modes", mode_names);
  snap.num("t", o.t);
  snap.num("bracket_lo", bracket.lo);
  snap.num("bracket_hi", bracket.hi);

  std::vector<std::pair<int, double>> points;
  for (int n : ns)
    for (double u : us) points.emplace_back(n, u);

  Plan plan;
  plan.name = "ring-sweep";
  plan.config_text = snap.str();
  plan.header = {"n_sites",       "u_over_t",   "theta_mode", "theta",     "e_theta",
                 "e_exact",       "rel_error_pct", "bracket_lo", "bracket_hi"};
  plan.n_points = modes.empty() ? 0 : points.size();
  plan.label = [points](std::size_t k) {
    return "n_sites=" + std::to_string(points[k].first) + " " + u_label(points[k].second);
  };
  plan.point = [points, modes, bracket, t = o.t](std::size_t k) {
    const rings::RingProblem prob(points[k].first, points[k].second, t);
    PointResult r;
    for (auto m : modes) {
      const auto p = prob.evaluate(m, bracket);
      r.rows.push_back({std::to_string(p.n_sites), format_double(p.u_over_t),
                        rings::to_string(p.theta_mode), format_double(p.theta),
                        format_double(p.e_theta), format_double(p.e_exact),
                        format_double(p.rel_error_pct), format_double(p.bracket.lo),
                        format_double(p.bracket.hi)});
    }
    return r;
  };
  return plan;
}

Plan plan_vqe(const Common& common, const VqeOptions& o) {
  check_common(common);
  const auto grid = parse_grid(o.u_over_t, "u_over_t");
  for (double u : grid) require(u > 0.0, "u_over_t values must be positive");
  require(o.t != 0.0 && std::isfinite(o.t), "t must be nonzero");
  require(std::isfinite(o.delta_mu), "delta_mu must be finite");
  require(o.repetitions >= 1, "repetitions must be >= 1");
  require(o.spsa_iters >= 1, "spsa_iters must be >= 1");
  require(std::isfinite(o.theta0), "theta0 must be finite");
  check_noise(o.shots, o.lambda1, o.lambda2);
  const auto backend = resolve_backend(common, Backend::Noisy);
  const double alpha = resolve_ionic_alpha(o.ionic_alpha, o.delta_mu);

  qsim::VqeConfig base;
  base.ionic_alpha = alpha;
  base.theta0 = o.theta0;
  base.repetitions = o.repetitions;
  base.noise.seed = common.seed;
  base.spsa.max_iter = o.spsa_iters;
  // exact: Brent on exact expectations; statevector: noiseless with shots; noisy: full model
  if (backend == Backend::Exact) {
    base.optimizer = qsim::Optimizer::Brent;
  } else {
    base.optimizer = qsim::Optimizer::Spsa;
    base.noise.shots = o.shots;
    if (backend == Backend::Noisy) {
      base.noise.lambda1 = o.lambda1;
      base.noise.lambda2 = o.lambda2;
    }
  }

  Snapshot snap(common, backend, "vqe");
  snap.list("u_over_t", grid);
  snap.num("delta_mu", o.delta_mu);
  snap.num("t", o.t);
  snap.integer("shots", o.shots);
  snap.num("lambda1", o.lambda1);
  snap.num("lambda2", o.lambda2);
  snap.integer("spsa_iters", o.spsa_iters);
  snap.integer("repetitions", o.repetitions);
  snap.num("theta0", o.theta0);
  snap.num("ionic_alpha", alpha);

  Plan plan;
  plan.name = "vqe";
  plan.config_text = snap.str();
  plan.header = {"u_over_t", "theta_star_mean", "E_mean",       "E_stderr",        "s2_mean",
                 "shots",    "lambda1",         "lambda2",      "spsa_iters",      "seed",
                 "E_ionic_mean", "E_ionic_stderr", "E0_exact", "E1_exact"};
  plan.n_points = grid.size();
  plan.label = [grid](std::size_t k) { return u_label(grid[k]); };
  plan.point = [grid, base, o, seed = common.seed](std::size_t k) {
    auto cfg = base;
    cfg.params = fock::HubbardParams::dimer_gauge(o.t, grid[k] * o.t, o.delta_mu * o.t);
    const auto r = qsim::vqe_dimer(cfg);
    const bool spsa = cfg.optimizer == qsim::Optimizer::Spsa;
    PointResult out;
    out.rows.push_back({format_double(grid[k]), format_double(r.theta_star),
                        format_double(r.e_heis.mean), format_double(r.e_heis.stderr_),
                        format_double(r.s2_heis),
                        cfg.noise.shots ? std::to_string(*cfg.noise.shots) : std::string(),
                        format_double(cfg.noise.lambda1), format_double(cfg.noise.lambda2),
                        spsa ? std::to_string(cfg.spsa.max_iter) : std::string("0"),
                        std::to_string(seed), format_double(r.e_ionic.mean),
                        format_double(r.e_ionic.stderr_), format_double(r.e0_exact),
                        format_double(r.e1_exact)});
    return out;
  };
  return plan;
}

int execute(const Plan& plan, const Common& common) {
  const fs::path dir(common.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + dir.string() + ": " + ec.message());
  const auto cfg_name = plan.name + ".config.ini";
  {
    std::ofstream cfg(dir / cfg_name, std::ios::out | std::ios::trunc);
    if (!cfg) throw ConfigError("cannot write " + (dir / cfg_name).string());
    cfg << plan.config_text;
  }
  const std::vector<std::string> comments = {
      "swhub " SWHUB_VERSION " " + plan.name,
      "config " + cfg_name + " fnv1a64=" + hex64(fnv1a64(plan.config_text))};
  OrderedCsvWriter writer((dir / (plan.name + ".csv")).string(), comments, plan.header);

  parallel_for(plan.n_points, common.jobs, [&](std::size_t k) {
    PointResult r;
    try {
      r = plan.point(k);
    } catch (const NumericalError& e) {
      r = {{}, plan.label(k) + ": " + e.what(), kExitNumerical};
    } catch (const std::invalid_argument& e) {
      r = {{}, plan.label(k) + ": " + e.what(), kExitConfig};
    } catch (const std::exception& e) {
      r = {{}, plan.label(k) + ": " + e.what(), kExitNumerical};
    }
    writer.submit(k, std::move(r));
  });

  if (writer.n_failures() == 0) return kExitOk;
  return writer.n_rows() > 0 ? kExitPartial : writer.worst_code();
}

}  // namespace swhub::cli
