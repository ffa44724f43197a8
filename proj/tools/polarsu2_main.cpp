// Copyright 2026 The polarsu2 Authors
// SPDX-License-Identifier: Apache-2.0

#include "polarsu2/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return polarsu2::cli::main_entry(argc, argv, std::cout, std::cerr); }
