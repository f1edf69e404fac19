#include <iostream>

#include "pdifmp_cli/cli.hpp"

int main(int argc, char** argv) { return pdifmp::cli::run(argc, argv, std::cout, std::cerr); }
