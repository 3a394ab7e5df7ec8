#include <iostream>

#include "parsep/cli.hpp"

int main(int argc, char** argv) { return parsep::cli::run(argc, argv, std::cout, std::cerr); }
