#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return privzone::cli::run(argc, argv, std::cout, std::cerr); }
