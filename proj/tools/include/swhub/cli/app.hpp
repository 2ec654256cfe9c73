// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "swhub/cli/commands.hpp"

namespace swhub::cli {

/// Parses argv (argv[0] is the program name), runs one command and returns its exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace swhub::cli
