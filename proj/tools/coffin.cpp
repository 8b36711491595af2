#include <iostream>

#include "coffin/cli/cli.hpp"

int main(int argc, char** argv) { return coffin::cli::run(argc, argv, std::cout, std::cerr); }
