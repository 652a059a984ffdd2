#include <iostream>

#include "dwork/cli.hpp"

int main(int argc, char** argv) { return dwork::run_cli(argc, argv, std::cout, std::cerr); }
