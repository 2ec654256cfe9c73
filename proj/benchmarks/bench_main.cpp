// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#include <benchmark/benchmark.h>

#include "swhub/fock.hpp"
#include "swhub/msw.hpp"
#include "swhub/qsim/circuit.hpp"
#include "swhub/qsim/fermion.hpp"
#include "swhub/qsim/simulator.hpp"
#include "swhub/qsim/vqe.hpp"
#include "swhub/recursion.hpp"
#include "swhub/rings.hpp"
#include "swhub/swgen.hpp"

using namespace swhub;

namespace {

fock::HubbardParams dimer4() { return fock::HubbardParams::dimer(1.0, 0.0, 0.0, 4.0, 4.0); }

void BM_BuildRingHamiltonian(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto b = fock::build_basis(n, n / 2, n / 2);
  const auto p = fock::HubbardParams::ring(n, 1.0, 4.0);
  for (auto _ : st) benchmark::DoNotOptimize(fock::build_hubbard(p, b));
  st.counters["dim"] = static_cast<double>(b->size());
}
BENCHMARK(BM_BuildRingHamiltonian)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_RingGroundEnergy(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(rings::RingProblem(n, 4.0).exact_energy());
}
BENCHMARK(BM_RingGroundEnergy)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_RingEnergyAtTheta(benchmark::State& st) {
  const rings::RingProblem pr(static_cast<int>(st.range(0)), 4.0);
  for (auto _ : st) benchmark::DoNotOptimize(pr.energy(0.8));
}
BENCHMARK(BM_RingEnergyAtTheta)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_IntegralsClosed(benchmark::State& st) {
  const auto table = swgen::sw_lambdas(fock::HubbardParams::dimer(1.0, 0.5, -0.5, 3.0, 6.0));
  for (auto _ : st) benchmark::DoNotOptimize(recursion::integrals_closed(table, 0.7));
}
BENCHMARK(BM_IntegralsClosed);

void BM_IntegralsOrder(benchmark::State& st) {
  const auto table = swgen::sw_lambdas(fock::HubbardParams::dimer(1.0, 0.5, -0.5, 3.0, 6.0));
  const int k = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(recursion::integrals_order(table, k));
}
BENCHMARK(BM_IntegralsOrder)->Arg(1)->Arg(8)->Arg(40);

void BM_CouplingCostMinimize(benchmark::State& st) {
  const auto p = dimer4();
  const auto h = fock::build_hubbard(p, fock::build_basis(2, 1, 1));
  const auto table = swgen::sw_lambdas(p);
  const auto route = st.range(0) == 0 ? msw::HbarRoute::Exponential : msw::HbarRoute::ClosedForm;
  for (auto _ : st) benchmark::DoNotOptimize(msw::minimize_theta(msw::cost_coupling(table, h, route)));
}
BENCHMARK(BM_CouplingCostMinimize)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_IterateSw(benchmark::State& st) {
  const auto p = dimer4();
  for (auto _ : st) benchmark::DoNotOptimize(msw::iterate_sw(p, 4, 0.0));
}
BENCHMARK(BM_IterateSw)->Unit(benchmark::kMillisecond);

void BM_JordanWignerHubbard(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto p = fock::HubbardParams::ring(n, 1.0, 4.0);
  for (auto _ : st) benchmark::DoNotOptimize(qsim::jordan_wigner(qsim::fermion_hubbard(p).total(), 2 * n));
}
BENCHMARK(BM_JordanWignerHubbard)->Arg(2)->Arg(4)->Arg(6);

void BM_VariationalStatevector(benchmark::State& st) {
  const qsim::DimerQubitModel m(dimer4());
  const auto c = qsim::variational_circuit(m.generator, qsim::StateKind::Heisenberg, 0.0, 0.785);
  for (auto _ : st) benchmark::DoNotOptimize(qsim::run_statevector(c));
}
BENCHMARK(BM_VariationalStatevector)->Unit(benchmark::kMicrosecond);

void BM_VariationalDensityNoisy(benchmark::State& st) {
  const qsim::DimerQubitModel m(dimer4());
  const auto c = qsim::variational_circuit(m.generator, qsim::StateKind::Heisenberg, 0.0, 0.785);
  qsim::NoiseModel noise;
  noise.lambda1 = 1e-4;
  noise.lambda2 = 1e-3;
  for (auto _ : st) benchmark::DoNotOptimize(qsim::run_density(c, noise));
}
BENCHMARK(BM_VariationalDensityNoisy)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
