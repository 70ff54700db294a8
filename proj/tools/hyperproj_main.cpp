#include <iostream>

#include "hyperproj/cli.hpp"

int main(int argc, char** argv) { return hyperproj::run_cli(argc, argv, std::cout, std::cerr); }
