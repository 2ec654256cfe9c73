// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#pragma once

#include <stdexcept>
#include <string>

namespace swhub {

/// Requested particle-number sector does not exist.
class SectorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands live in different bases or have incompatible shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative method failed to converge or produced a non-finite value.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace swhub
