#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return twobridge::cli::run(argc, argv, std::cout, std::cerr); }
