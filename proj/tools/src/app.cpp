// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#include "swhub/cli/app.hpp"

#include <iostream>

#include "CLI11.hpp"

namespace swhub::cli {

namespace {

constexpr auto kMaxList = CLI::detail::expected_max_vector_size;

CLI::Option* add_list(CLI::App* app, const std::string& names, std::vector<std::string>& v,
                      const std::string& help) {
  return app->add_option(names, v, help)->expected(0, kMaxList)->delimiter(',');
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schrieffer-Wolff transformations of Hubbard dimers and rings"};
  app.set_version_flag("--version", SWHUB_VERSION);
  app.set_config("--config", "", "Read options from an INI file")->check(CLI::ExistingFile);
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1, 1);

  Common common;
  app.add_option("--out", common.out, "Output directory")->configurable(false);
  app.add_option("--jobs", common.jobs, "Worker threads for grid points")->configurable(false);
  app.add_option("--seed", common.seed, "Global seed");
  app.add_option("--backend", common.backend, "exact, statevector or noisy")
      ->check(CLI::IsMember({"exact", "statevector", "noisy"}));

  DimerVarOptions dv;
  auto* c_dv = app.add_subcommand("dimer-var", "Variational SW scan of the dimer")->fallthrough();
  add_list(c_dv, "--u_over_t,--u-over-t", dv.u_over_t, "U/t grid");
  c_dv->add_option("--delta_mu,--delta-mu", dv.delta_mu, "(mu_1 - mu_0)/t");
  c_dv->add_option("--t", dv.t, "Hopping");
  c_dv->add_option("--cost", dv.cost, "energy, ionic or coupling")
      ->check(CLI::IsMember({"energy", "ionic", "coupling"}));
  c_dv->add_option("--ionic_alpha,--ionic-alpha", dv.ionic_alpha, "Ionic mixing angle or auto");
  c_dv->add_option("--bracket_lo,--bracket-lo", dv.bracket_lo);
  c_dv->add_option("--bracket_hi,--bracket-hi", dv.bracket_hi);
  c_dv->add_option("--shots", dv.shots, "Shots per Pauli string (noisy)");
  c_dv->add_option("--lambda1", dv.lambda1, "One-qubit depolarizing probability (noisy)");
  c_dv->add_option("--lambda2", dv.lambda2, "Two-qubit depolarizing probability (noisy)");

  DimerIterOptions di;
  auto* c_di = app.add_subcommand("dimer-iter", "Iterative SW of the dimer")->fallthrough();
  add_list(c_di, "--u_over_t,--u-over-t", di.u_over_t, "U/t grid");
  c_di->add_option("--delta_mu,--delta-mu", di.delta_mu, "(mu_1 - mu_0)/t");
  c_di->add_option("--t", di.t, "Hopping");
  c_di->add_option("--n_iters,--n-iters", di.n_iters, "Generator updates after standard SW");
  c_di->add_option("--tol", di.tol, "Stop once the coupling norm is below this");
  c_di->add_option("--trotterized", di.trotterized, "Also run the Trotterized circuits");
  c_di->add_option("--ionic_alpha,--ionic-alpha", di.ionic_alpha, "Ionic mixing angle or auto");

  RingSweepOptions rs;
  auto* c_rs = app.add_subcommand("ring-sweep", "Trial-state errors on Hubbard rings")->fallthrough();
  add_list(c_rs, "--n_sites,--n-sites", rs.n_sites, "Ring sizes (even, <= 10)");
  add_list(c_rs, "--u_over_t,--u-over-t", rs.u_over_t, "U/t grid");
  add_list(c_rs, "--modes", rs.modes, "fixed-1 and/or optimized");
  c_rs->add_option("--t", rs.t, "Hopping");
  c_rs->add_option("--bracket_lo,--bracket-lo", rs.bracket_lo);
  c_rs->add_option("--bracket_hi,--bracket-hi", rs.bracket_hi);

  VqeOptions vq;
  auto* c_vq = app.add_subcommand("vqe", "Noisy circuit simulation of the dimer")->fallthrough();
  add_list(c_vq, "--u_over_t,--u-over-t", vq.u_over_t, "U/t grid");
  c_vq->add_option("--delta_mu,--delta-mu", vq.delta_mu, "(mu_1 - mu_0)/t");
  c_vq->add_option("--t", vq.t, "Hopping");
  c_vq->add_option("--shots", vq.shots, "Shots per Pauli string");
  c_vq->add_option("--lambda1", vq.lambda1, "One-qubit depolarizing probability");
  c_vq->add_option("--lambda2", vq.lambda2, "Two-qubit depolarizing probability");
  c_vq->add_option("--spsa_iters,--spsa-iters", vq.spsa_iters, "SPSA iterations");
  c_vq->add_option("--repetitions", vq.repetitions, "Noisy evaluations at the optimum");
  c_vq->add_option("--theta0", vq.theta0, "SPSA starting point");
  c_vq->add_option("--ionic_alpha,--ionic-alpha", vq.ionic_alpha, "Ionic mixing angle or auto");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    Plan plan;
    if (*c_dv)
      plan = plan_dimer_var(common, dv);
    else if (*c_di)
      plan = plan_dimer_iter(common, di);
    else if (*c_rs)
      plan = plan_ring_sweep(common, rs);
    else
      plan = plan_vqe(common, vq);
    const int code = execute(plan, common);
    if (code != kExitOk)
      err << "swhub " << plan.name << ": some grid points failed, see # lines in "
          << plan.name << ".csv\n";
    return code;
  } catch (const ConfigError& e) {
    err << "swhub: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "swhub: " << e.what() << '\n';
    return kExitNumerical;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace swhub::cli
