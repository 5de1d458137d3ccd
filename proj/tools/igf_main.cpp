#include <iostream>

#include "igf/cli.hpp"

int main(int argc, char** argv) { return igf::cli::run(argc, argv, std::cout, std::cerr); }
