// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Exit codes: 0 success, 1 a verification check
// failed, 2 usage or configuration error, 3 unreadable or invalid data.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace morrey::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace morrey::cli
