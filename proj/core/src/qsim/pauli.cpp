// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#include "swhub/qsim/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace swhub::qsim {

namespace {

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int letter_code(bool x, bool z) { return x ? (z ? 2 : 1) : (z ? 3 : 0); }

/// Power of i in the product of single-qubit letters a * b (codes I=0, X=1, Y=2, Z=3).
int product_power(int a, int b) {
  if (a == 0 || b == 0 || a == b) return 0;
  // Cyclic X -> Y -> Z gives +i.
  return ((b - a + 3) % 3 == 1) ? 1 : 3;
}

}  // namespace

PauliString::PauliString(int n_qubits, std::uint64_t x, std::uint64_t z)
    : n_(n_qubits), x_(x), z_(z) {
  if (n_qubits < 0 || n_qubits > 64) throw std::invalid_argument("PauliString: bad qubit count");
  const std::uint64_t mask = n_qubits == 64 ? ~0ULL : ((1ULL << n_qubits) - 1ULL);
  if ((x & ~mask) || (z & ~mask)) throw std::out_of_range("PauliString: mask exceeds qubits");
}

PauliString PauliString::parse(std::string_view letters) {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (std::size_t q = 0; q < letters.size(); ++q) {
    const std::uint64_t bit = 1ULL << q;
    switch (letters[q]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default: throw std::invalid_argument("PauliString::parse: bad letter");
    }
  }
  return PauliString(static_cast<int>(letters.size()), x, z);
}

PauliString PauliString::single(int n_qubits, int qubit, char letter) {
  std::string s(static_cast<std::size_t>(n_qubits), 'I');
  if (qubit < 0 || qubit >= n_qubits) throw std::out_of_range("PauliString::single: bad qubit");
  s[static_cast<std::size_t>(qubit)] = letter;
  return parse(s);
}

char PauliString::letter(int q) const {
  const bool x = (x_ >> q) & 1ULL;
  const bool z = (z_ >> q) & 1ULL;
  return "IXYZ"[letter_code(x, z)];
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

std::string PauliString::str() const {
  std::string s(static_cast<std::size_t>(n_), 'I');
  for (int q = 0; q < n_; ++q) s[static_cast<std::size_t>(q)] = letter(q);
  return s;
}

cplx PauliString::phase(std::uint64_t j) const {
  const int n_y = std::popcount(x_ & z_);
  const int sign = std::popcount(j & z_) & 1;
  const cplx p = kIPow[n_y % 4];
  return sign ? -p : p;
}

bool PauliString::commutes_with(const PauliString& o) const {
  return ((std::popcount(x_ & o.z_) + std::popcount(z_ & o.x_)) % 2) == 0;
}

bool operator<(const PauliString& a, const PauliString& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  for (int q = 0; q < a.n_; ++q) {
    const char la = a.letter(q);
    const char lb = b.letter(q);
    if (la != lb) return la < lb;
  }
  return false;
}

std::pair<cplx, PauliString> multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("multiply: qubit count mismatch");
  int power = 0;
  for (int q = 0; q < a.n_qubits(); ++q) {
    const int ca = letter_code((a.x_mask() >> q) & 1ULL, (a.z_mask() >> q) & 1ULL);
    const int cb = letter_code((b.x_mask() >> q) & 1ULL, (b.z_mask() >> q) & 1ULL);
    power += product_power(ca, cb);
  }
  return {kIPow[power % 4],
          PauliString(a.n_qubits(), a.x_mask() ^ b.x_mask(), a.z_mask() ^ b.z_mask())};
}

PauliSum PauliSum::identity(int n_qubits, cplx coeff) {
  PauliSum s(n_qubits);
  s.add(PauliString(n_qubits), coeff);
  return s;
}

void PauliSum::add(const PauliString& p, cplx coeff) {
  if (p.n_qubits() != n_) throw std::invalid_argument("PauliSum::add: qubit count mismatch");
  terms_[p] += coeff;
}

PauliSum PauliSum::simplified(double tol) const {
  PauliSum out(n_);
  for (const auto& [p, c] : terms_)
    if (std::abs(c) > tol) out.terms_.emplace(p, c);
  return out;
}

PauliSum PauliSum::operator+(const PauliSum& o) const {
  PauliSum out = *this;
  for (const auto& [p, c] : o.terms_) out.add(p, c);
  return out;
}

PauliSum PauliSum::operator-(const PauliSum& o) const { return *this + o * cplx(-1.0); }

PauliSum PauliSum::operator*(const PauliSum& o) const {
  if (n_ != o.n_) throw std::invalid_argument("PauliSum: qubit count mismatch");
  PauliSum out(n_);
  for (const auto& [pa, ca] : terms_)
    for (const auto& [pb, cb] : o.terms_) {
      auto [ph, p] = multiply(pa, pb);
      out.add(p, ph * ca * cb);
    }
  return out;
}

PauliSum PauliSum::operator*(cplx s) const {
  PauliSum out(n_);
  for (const auto& [p, c] : terms_) out.terms_.emplace(p, c * s);
  return out;
}

Eigen::MatrixXcd PauliSum::to_matrix() const {
  const Eigen::Index d = Eigen::Index{1} << n_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& [p, c] : terms_)
    for (Eigen::Index j = 0; j < d; ++j) {
      const auto uj = static_cast<std::uint64_t>(j);
      m(static_cast<Eigen::Index>(uj ^ p.x_mask()), j) += c * p.phase(uj);
    }
  return m;
}

Eigen::VectorXcd PauliSum::apply(const Eigen::VectorXcd& psi) const {
  const Eigen::Index d = Eigen::Index{1} << n_;
  if (psi.size() != d) throw std::invalid_argument("PauliSum::apply: state size mismatch");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(d);
  for (const auto& [p, c] : terms_)
    for (Eigen::Index j = 0; j < d; ++j) {
      const auto uj = static_cast<std::uint64_t>(j);
      out[static_cast<Eigen::Index>(uj ^ p.x_mask())] += c * p.phase(uj) * psi[j];
    }
  return out;
}

bool PauliSum::all_commute() const {
  for (auto a = terms_.begin(); a != terms_.end(); ++a)
    for (auto b = std::next(a); b != terms_.end(); ++b)
      if (!a->first.commutes_with(b->first)) return false;
  return true;
}

cplx coefficient(const PauliSum& s, const PauliString& p) {
  auto it = s.terms().find(p);
  return it == s.terms().end() ? cplx(0.0) : it->second;
}

}  // namespace swhub::qsim
