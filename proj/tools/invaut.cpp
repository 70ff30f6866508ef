#include <iostream>

#include "invaut/cli.hpp"

int main(int argc, char** argv) { return invaut::run_cli(argc, argv, std::cout, std::cerr); }
