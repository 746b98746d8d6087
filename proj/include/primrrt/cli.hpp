// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace primrrt {

enum ExitCode : int { kExitSuccess = 0, kExitUsage = 1, kExitPlanFailure = 2 };

/// Entry point behind the `primrrt` binary. args excludes the program name.
///
///   plan --map <file> (--set <name> | --set-file <file>) [flags]
///   primitives list
///   primitives show <name> [--svg fan.svg]
///   batch --seeds <a..b> <plan flags> [--report stats.json]
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primrrt
