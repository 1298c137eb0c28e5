#include "bsym/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return bsym::cli::run(argc, argv, std::cout, std::cerr); }
