#include "valsat/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return valsat::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
