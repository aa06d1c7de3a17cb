#include <iostream>

#include "absorder/cli.hpp"

int main(int argc, char** argv) { return absorder::run_cli(argc, argv, std::cout, std::cerr); }
