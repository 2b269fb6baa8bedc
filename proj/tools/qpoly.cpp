#include <iostream>

#include "qpoly/cli.hpp"

int main(int argc, char** argv) { return qpoly::cli::run(argc, argv, std::cout, std::cerr); }
