#include <iostream>

#include "g2gamma/cli/run.hpp"

int main(int argc, char** argv) { return g2gamma::cli::run(argc, argv, std::cout, std::cerr); }
