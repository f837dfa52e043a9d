#include <iostream>

#include "linearr_cli/cli.hpp"

int main(int argc, char** argv) { return linearr::cli::cli_main(argc, argv, std::cout, std::cerr); }
