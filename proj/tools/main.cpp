#include <iostream>

#include "chaos01/cli.hpp"

int main(int argc, char** argv) { return chaos01::run_cli(argc, argv, std::cout, std::cerr); }
