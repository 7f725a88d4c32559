#include <iostream>

#include "zcfast/cli.hpp"

int main(int argc, char** argv) { return zcfast::run_cli(argc, argv, std::cout, std::cerr); }
