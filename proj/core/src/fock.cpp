// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#include "swhub/fock.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "swhub/errors.hpp"
#include "swhub/linalg.hpp"

namespace swhub::fock {

namespace {

constexpr std::uint64_t kUpMask = 0x5555555555555555ULL;
constexpr std::uint64_t kDownMask = 0xAAAAAAAAAAAAAAAAULL;

int parity_below(std::uint64_t bits, int orbital) {
  const std::uint64_t below = orbital == 0 ? 0ULL : (bits & ((1ULL << orbital) - 1ULL));
  return std::popcount(below) & 1;
}

}  // namespace

int FockState::count_up() const { return std::popcount(bits & kUpMask); }
int FockState::count_down() const { return std::popcount(bits & kDownMask); }

std::string FockState::ket(int n_orbitals) const {
  std::string out(static_cast<std::size_t>(n_orbitals), '0');
  for (int o = 0; o < n_orbitals; ++o)
    if (occupied(o)) out[static_cast<std::size_t>(o)] = '1';
  return out;
}

std::optional<SignedState> create(FockState s, int orbital) {
  if (s.occupied(orbital)) return std::nullopt;
  return SignedState{FockState{s.bits | (1ULL << orbital)}, parity_below(s.bits, orbital) ? -1 : 1};
}

std::optional<SignedState> annihilate(FockState s, int orbital) {
  if (!s.occupied(orbital)) return std::nullopt;
  return SignedState{FockState{s.bits & ~(1ULL << orbital)},
                     parity_below(s.bits, orbital) ? -1 : 1};
}

std::optional<SignedState> hop(FockState s, int to, int from) {
  auto a = annihilate(s, from);
  if (!a) return std::nullopt;
  auto c = create(a->state, to);
  if (!c) return std::nullopt;
  return SignedState{c->state, a->sign * c->sign};
}

Basis::Basis(int n_sites, std::optional<int> n_up, std::optional<int> n_down,
             std::vector<FockState> states)
    : n_sites_(n_sites), n_up_(n_up), n_down_(n_down), states_(std::move(states)) {}

Basis Basis::sector(int n_sites, int n_up, int n_down) {
  if (n_sites < 1 || n_sites > 31)
    throw SectorError("build_basis: n_sites must be in [1, 31], got " + std::to_string(n_sites));
  if (n_up < 0 || n_down < 0 || n_up > n_sites || n_down > n_sites)
    throw SectorError("build_basis: empty sector (" + std::to_string(n_sites) + "," +
                      std::to_string(n_up) + "," + std::to_string(n_down) + ")");
  // Enumerate site-occupation patterns per spin, then interleave.
  auto patterns = [n_sites](int n) {
    std::vector<std::uint32_t> out;
    for (std::uint64_t m = 0; m < (1ULL << n_sites); ++m)
      if (std::popcount(m) == n) out.push_back(static_cast<std::uint32_t>(m));
    return out;
  };
  auto spread = [n_sites](std::uint32_t sites, int offset) {
    std::uint64_t bits = 0;
    for (int i = 0; i < n_sites; ++i)
      if ((sites >> i) & 1U) bits |= 1ULL << (2 * i + offset);
    return bits;
  };
  const auto ups = patterns(n_up);
  const auto downs = patterns(n_down);
  std::vector<FockState> states;
  states.reserve(ups.size() * downs.size());
  for (auto u : ups)
    for (auto d : downs) states.push_back(FockState{spread(u, 0) | spread(d, 1)});
  std::sort(states.begin(), states.end());
  return Basis(n_sites, n_up, n_down, std::move(states));
}

Basis Basis::full(int n_sites) {
  if (n_sites < 1 || n_sites > 12)
    throw SectorError("Basis::full: n_sites must be in [1, 12]");
  std::vector<FockState> states(1ULL << (2 * n_sites));
  for (std::uint64_t b = 0; b < states.size(); ++b) states[b] = FockState{b};
  return Basis(n_sites, std::nullopt, std::nullopt, std::move(states));
}

Basis Basis::from_states(int n_sites, std::vector<FockState> states) {
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  const std::uint64_t limit = n_sites >= 32 ? ~0ULL : (1ULL << (2 * n_sites));
  for (const auto& s : states)
    if (s.bits >= limit) throw SectorError("Basis::from_states: state outside orbital range");
  std::optional<int> up;
  std::optional<int> down;
  if (!states.empty()) {
    up = states.front().count_up();
    down = states.front().count_down();
    for (const auto& s : states) {
      if (s.count_up() != *up) up.reset();
      if (s.count_down() != *down) down.reset();
      if (!up && !down) break;
    }
  }
  return Basis(n_sites, up, down, std::move(states));
}

bool Basis::is_half_filled() const {
  return n_up_ && n_down_ && (*n_up_ + *n_down_ == n_sites_);
}

std::optional<std::size_t> Basis::find(FockState s) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), s);
  if (it == states_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

std::size_t Basis::index(FockState s) const {
  auto i = find(s);
  if (!i) throw SectorError("Basis::index: state " + s.ket(n_orbitals()) + " not in basis");
  return *i;
}

bool Basis::same_as(const Basis& other) const {
  return n_sites_ == other.n_sites_ && states_ == other.states_;
}

BasisPtr build_basis(int n_sites, int n_up, int n_down) {
  return std::make_shared<const Basis>(Basis::sector(n_sites, n_up, n_down));
}

BasisPtr build_full_basis(int n_sites) { return std::make_shared<const Basis>(Basis::full(n_sites)); }

HubbardParams HubbardParams::dimer(double t, double mu0, double mu1, double U0, double U1) {
  HubbardParams p;
  p.n_sites = 2;
  p.t = Eigen::MatrixXd::Zero(2, 2);
  p.t(0, 1) = p.t(1, 0) = t;
  p.mu = {mu0, mu1};
  p.U = {U0, U1};
  return p;
}

HubbardParams HubbardParams::dimer_gauge(double t, double U, double delta_mu) {
  return dimer(t, -0.5 * delta_mu, 0.5 * delta_mu, U, U);
}

HubbardParams HubbardParams::ring(int n_sites, double t, double U) {
  if (n_sites < 2) throw std::invalid_argument("HubbardParams::ring: need at least 2 sites");
  HubbardParams p;
  p.n_sites = n_sites;
  p.t = Eigen::MatrixXd::Zero(n_sites, n_sites);
  for (int i = 0; i < n_sites; ++i) {
    const int j = (i + 1) % n_sites;
    if (i == j) continue;
    p.t(i, j) = p.t(j, i) = t;
  }
  p.mu.assign(static_cast<std::size_t>(n_sites), 0.0);
  p.U.assign(static_cast<std::size_t>(n_sites), U);
  p.periodic = n_sites > 2;
  return p;
}

void HubbardParams::validate() const {
  const auto n = static_cast<std::size_t>(n_sites);
  if (n_sites < 1) throw std::invalid_argument("HubbardParams: n_sites must be positive");
  if (t.rows() != n_sites || t.cols() != n_sites || mu.size() != n || U.size() != n)
    throw DimensionError("HubbardParams: array sizes do not match n_sites");
  for (int i = 0; i < n_sites; ++i) {
    if (t(i, i) != 0.0) throw std::invalid_argument("HubbardParams: hopping diagonal must be 0");
    for (int j = 0; j < n_sites; ++j)
      if (t(i, j) != t(j, i)) throw std::invalid_argument("HubbardParams: hopping not symmetric");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!std::isfinite(mu[i]) || !std::isfinite(U[i]))
      throw std::invalid_argument("HubbardParams: non-finite site parameter");
}

std::vector<std::pair<int, int>> HubbardParams::bonds() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_sites; ++i)
    for (int j = i + 1; j < n_sites; ++j)
      if (t(i, j) != 0.0) out.emplace_back(i, j);
  return out;
}

MatrixOperator HubbardSplit::total() const { return h0 + v; }

HubbardSplit build_hubbard(const HubbardParams& params, BasisPtr basis) {
  params.validate();
  if (basis->n_sites() != params.n_sites)
    throw DimensionError("build_hubbard: basis has " + std::to_string(basis->n_sites()) +
                         " sites, params " + std::to_string(params.n_sites));
  const auto dim = static_cast<Eigen::Index>(basis->size());
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(dim);
  std::vector<MatrixOperator::Triplet> hops;
  const auto bonds = params.bonds();
  for (Eigen::Index c = 0; c < dim; ++c) {
    const FockState s = basis->state(static_cast<std::size_t>(c));
    for (int i = 0; i < params.n_sites; ++i) {
      const bool up = s.occupied(i, Spin::Up);
      const bool dn = s.occupied(i, Spin::Down);
      const auto ui = static_cast<std::size_t>(i);
      diag[c] += params.mu[ui] * (static_cast<int>(up) + static_cast<int>(dn));
      if (up && dn) diag[c] += params.U[ui];
    }
    for (auto [i, j] : bonds) {
      for (Spin sp : {Spin::Up, Spin::Down}) {
        const int oi = orbital_index(i, sp);
        const int oj = orbital_index(j, sp);
        for (auto [to, from] : {std::pair{oi, oj}, std::pair{oj, oi}}) {
          auto r = hop(s, to, from);
          if (!r) continue;
          auto row = basis->find(r->state);
          if (!row) continue;
          hops.emplace_back(static_cast<Eigen::Index>(*row), c, -params.t(i, j) * r->sign);
        }
      }
    }
  }
  return HubbardSplit{MatrixOperator::diagonal(basis, diag),
                      MatrixOperator::from_triplets(basis, hops, true)};
}

MatrixOperator heisenberg_projector(BasisPtr basis) {
  const auto dim = static_cast<Eigen::Index>(basis->size());
  Eigen::VectorXd d = Eigen::VectorXd::Zero(dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    const FockState s = basis->state(static_cast<std::size_t>(c));
    bool doubly = false;
    for (int i = 0; i < basis->n_sites() && !doubly; ++i)
      doubly = s.occupied(i, Spin::Up) && s.occupied(i, Spin::Down);
    if (!doubly) d[c] = 1.0;
  }
  return MatrixOperator::diagonal(std::move(basis), d);
}

BlockParts block_split(const MatrixOperator& op, const MatrixOperator& projector) {
  const auto q = MatrixOperator::identity(projector.basis_ptr()) - projector;
  auto pop = projector.product(op).product(projector);
  auto qoq = q.product(op).product(q);
  auto poq = projector.product(op).product(q);
  auto qop = q.product(op).product(projector);
  auto flag = [&op](const MatrixOperator& m) {
    if (!op.hermitian()) return m;
    if (m.is_dense()) return MatrixOperator(m.basis_ptr(), m.dense(), true);
    return MatrixOperator(m.basis_ptr(), m.sparse(), true);
  };
  auto d = flag(pop + qoq);
  auto x = flag(poq + qop);
  return BlockParts{std::move(d), std::move(x)};
}

std::vector<EigenPair> exact_eigensolve(const MatrixOperator& op, int k) {
  if (!op.hermitian()) throw std::invalid_argument("exact_eigensolve: operator is not hermitian");
  const Eigen::Index n = op.dim();
  if (k < 1 || k > n) throw std::invalid_argument("exact_eigensolve: k out of range");
  std::vector<EigenPair> out;
  if (n <= kDenseLimit) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.to_dense());
    if (es.info() != Eigen::Success) throw NumericalError("exact_eigensolve: dense solver failed");
    for (int i = 0; i < k; ++i)
      out.push_back(EigenPair{es.eigenvalues()[i], es.eigenvectors().col(i)});
    return out;
  }
  const auto& s = op.sparse();
  auto ritz = linalg::lanczos_lowest(
      [&s](const Eigen::VectorXd& v) { return Eigen::VectorXd(s * v); }, n, k);
  for (auto& r : ritz) out.push_back(EigenPair{r.value, std::move(r.vector)});
  return out;
}

MatrixOperator spin_squared(BasisPtr basis) {
  // S^2 = S_- S_+ + S_z (S_z + 1); S_- S_+ conserves (N_up, N_down).
  const auto dim = static_cast<Eigen::Index>(basis->size());
  std::vector<MatrixOperator::Triplet> trips;
  const int n = basis->n_sites();
  for (Eigen::Index c = 0; c < dim; ++c) {
    const FockState s = basis->state(static_cast<std::size_t>(c));
    const double sz = 0.5 * (s.count_up() - s.count_down());
    trips.emplace_back(c, c, sz * (sz + 1.0));
    for (int j = 0; j < n; ++j) {
      auto a = hop(s, orbital_index(j, Spin::Up), orbital_index(j, Spin::Down));
      if (!a) continue;
      for (int i = 0; i < n; ++i) {
        auto b = hop(a->state, orbital_index(i, Spin::Down), orbital_index(i, Spin::Up));
        if (!b) continue;
        auto row = basis->find(b->state);
        if (!row) continue;
        trips.emplace_back(static_cast<Eigen::Index>(*row), c,
                           static_cast<double>(a->sign * b->sign));
      }
    }
  }
  return MatrixOperator::from_triplets(std::move(basis), trips, true);
}

Eigen::VectorXd occupation_vector(const Basis& basis, int orbital) {
  Eigen::VectorXd d(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c)
    d[static_cast<Eigen::Index>(c)] = basis.state(c).occupied(orbital) ? 1.0 : 0.0;
  return d;
}

}  // namespace swhub::fock
