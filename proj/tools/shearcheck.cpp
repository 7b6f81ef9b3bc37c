#include <iostream>

#include "shear/cli.hpp"

int main(int argc, char** argv) { return shear::cli::run_cli(argc, argv, std::cout, std::cerr); }
