#include <iostream>

#include "wincx/cli.hpp"

int main(int argc, char** argv) { return wincx::run_cli(argc, argv, std::cout, std::cerr); }
