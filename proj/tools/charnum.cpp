#include "charnum/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return charnum::cli::run(argc, argv, std::cout, std::cerr); }
