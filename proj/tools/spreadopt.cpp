// SPDX-License-Identifier: MIT
#include <iostream>

#include "spread/cli.hpp"

int main(int argc, char** argv) { return spread::cli::run(argc, argv, std::cout, std::cerr); }
