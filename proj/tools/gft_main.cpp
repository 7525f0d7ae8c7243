#include <iostream>

#include "gft/cli.hpp"

int main(int argc, char** argv) { return gft::cli::main(argc, argv, std::cout, std::cerr); }
