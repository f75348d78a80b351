#include <iostream>

#include "gradalg/cli.hpp"

int main(int argc, char** argv) { return gradalg::cli::main(argc, argv, std::cout, std::cerr); }
