#include <iostream>

#include "thetakit/cli.hpp"

int main(int argc, char** argv) { return thetakit::cli::main_entry(argc, argv, std::cout, std::cerr); }
