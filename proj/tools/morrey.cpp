// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "morrey/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return morrey::cli::run(args, std::cout, std::cerr);
}
