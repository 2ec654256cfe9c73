// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swhub/cli/csv.hpp"

namespace swhub::cli {

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitNumerical = 3, kExitPartial = 4 };

/// Invalid user configuration (exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Backend { Exact, Statevector, Noisy };

std::string to_string(Backend b);
Backend parse_backend(const std::string& s);

/// Options shared by every command.
struct Common {
  std::string out = ".";
  int jobs = 1;
  std::uint64_t seed = 7;
  std::string backend;  // empty: the command's default
};

/// Grid tokens as read from the command line or config; empty tokens are dropped.
std::vector<double> parse_grid(const std::vector<std::string>& tokens, const char* name);
std::vector<int> parse_int_grid(const std::vector<std::string>& tokens, const char* name);
/// "auto" -> -pi/4 for delta_mu == 0, else 0.
double resolve_ionic_alpha(const std::string& token, double delta_mu);

struct DimerVarOptions {
  std::vector<std::string> u_over_t{"0.5", "1", "2", "4", "8", "20"};
  double delta_mu = 0.0;  // in units of t
  double t = 1.0;
  std::string cost = "energy";  // energy | ionic | coupling
  std::string ionic_alpha = "auto";
  double bracket_lo = 0.0;
  double bracket_hi = 1.5;
  int shots = 8192;  // noisy backend
  double lambda1 = 1e-4;
  double lambda2 = 1e-3;
};

struct DimerIterOptions {
  std::vector<std::string> u_over_t{"0.5", "1", "2", "4", "8", "20"};
  double delta_mu = 0.0;
  double t = 1.0;
  int n_iters = 3;
  double tol = 1e-10;
  bool trotterized = false;
  std::string ionic_alpha = "auto";
};

struct RingSweepOptions {
  std::vector<std::string> n_sites{"2", "4", "6", "8"};
  std::vector<std::string> u_over_t{"4", "8", "20"};
  std::vector<std::string> modes{"fixed-1", "optimized"};
  double t = 1.0;
  double bracket_lo = 0.0;
  double bracket_hi = 1.2;
};

struct VqeOptions {
  std::vector<std::string> u_over_t{"4"};
  double delta_mu = 0.0;
  double t = 1.0;
  int shots = 8192;
  double lambda1 = 1e-4;
  double lambda2 = 1e-3;
  int spsa_iters = 1000;
  int repetitions = 100;
  double theta0 = 1.0;
  std::string ionic_alpha = "auto";
};

/// One command ready to run: CSV layout, resolved config text and per-point work.
struct Plan {
  std::string name;
  std::string config_text;  // resolved configuration in --config syntax
  CsvRow header;
  std::size_t n_points = 0;
  std::function<std::string(std::size_t)> label;
  std::function<PointResult(std::size_t)> point;
};

/// Validates options and builds the plan; throws ConfigError.
Plan plan_dimer_var(const Common& common, const DimerVarOptions& o);
Plan plan_dimer_iter(const Common& common, const DimerIterOptions& o);
Plan plan_ring_sweep(const Common& common, const RingSweepOptions& o);
Plan plan_vqe(const Common& common, const VqeOptions& o);

/// Writes <out>/<name>.config.ini and <out>/<name>.csv; returns the exit code.
int execute(const Plan& plan, const Common& common);

}  // namespace swhub::cli
