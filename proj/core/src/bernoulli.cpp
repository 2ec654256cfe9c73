// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "swhub/recursion.hpp"

namespace swhub::recursion {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

/// B_0..B_n by the Akiyama-Tanigawa algorithm (B_1 = +1/2; only even indices are used).
std::vector<cpp_rational> bernoulli_rational(int n) {
  std::vector<cpp_rational> a(static_cast<std::size_t>(n) + 1);
  std::vector<cpp_rational> b(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    a[static_cast<std::size_t>(m)] = cpp_rational(1, m + 1);
    for (int j = m; j >= 1; --j) {
      const auto uj = static_cast<std::size_t>(j);
      a[uj - 1] = cpp_rational(j) * (a[uj - 1] - a[uj]);
    }
    b[static_cast<std::size_t>(m)] = a[0];
  }
  return b;
}

}  // namespace

std::vector<double> bernoulli_even(int n_max) {
  if (n_max < 0) throw std::invalid_argument("bernoulli_even: negative order");
  const auto b = bernoulli_rational(2 * n_max);
  std::vector<double> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(static_cast<double>(b[static_cast<std::size_t>(2 * n)]));
  return out;
}

std::vector<double> vv_coefficients(int n_max) {
  if (n_max < 0) throw std::invalid_argument("vv_coefficients: negative order");
  const auto b = bernoulli_rational(2 * n_max);
  std::vector<double> out;
  cpp_int factorial = 1;
  cpp_int power = 1;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) {
      factorial *= cpp_int(2 * n - 1) * cpp_int(2 * n);
      power *= 4;
    }
    const cpp_rational c = b[static_cast<std::size_t>(2 * n)] * cpp_rational(power, factorial);
    out.push_back(static_cast<double>(c));
  }
  return out;
}

}  // namespace swhub::recursion
