// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors

#include <iostream>
#include <string>
#include <vector>

#include "primrrt/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return primrrt::run_cli(args, std::cout, std::cerr);
}
