#include <iostream>

#include "anyonlab/cli.hpp"

int main(int argc, char** argv) { return anyonlab::run_cli(argc, argv, std::cout, std::cerr); }
