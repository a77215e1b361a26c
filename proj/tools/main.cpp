#include <iostream>

#include "abideal/cli.hpp"

int main(int argc, char** argv) { return abideal::run_cli(argc, argv, std::cout, std::cerr); }
