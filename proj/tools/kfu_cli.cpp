#include <iostream>

#include "kfu/cli.hpp"

int main(int argc, char** argv) { return kfu::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
