#include <iostream>

#include "ppav/cli.hpp"

int main(int argc, char** argv) { return ppav::run_cli(argc, argv, std::cout, std::cerr); }
