#include <iostream>

#include "ek/cli.hpp"

int main(int argc, char** argv) { return ek::cli::main(argc, argv, std::cout, std::cerr); }
