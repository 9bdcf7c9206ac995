#include "tgs/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tgs::run_cli(argc, argv, std::cout, std::cerr); }
