#include <iostream>

#include "dyckhankel/cli.hpp"

int main(int argc, char** argv) { return dyckhankel::run_cli(argc, argv, std::cout, std::cerr); }
