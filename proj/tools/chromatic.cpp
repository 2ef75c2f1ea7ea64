#include <iostream>

#include "chromatic/cli.hpp"

int main(int argc, char** argv) { return chromatic::cli_dispatch(argc, argv, std::cout, std::cerr); }
