// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#include <iostream>

#include "swhub/cli/app.hpp"

int main(int argc, char** argv) { return swhub::cli::run(argc, argv, std::cout, std::cerr); }
