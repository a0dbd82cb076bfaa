#include <iostream>

#include "hyperfn/cli.hpp"

int main(int argc, char** argv) { return hyperfn::cli::run_command_line(argc, argv, std::cout, std::cerr); }
