#include <iostream>

#include "senti/cli.hpp"

int main(int argc, char** argv) { return senti::run_cli(argc, argv, std::cout, std::cerr); }
