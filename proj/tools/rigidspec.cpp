#include <iostream>

#include "rigidspec/cli.hpp"

int main(int argc, char** argv) { return rigidspec::run_cli(argc, argv, std::cout, std::cerr); }
