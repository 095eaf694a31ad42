#include "nilzeta/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return nilzeta::cli::run(argc, argv, std::cout, std::cerr); }
