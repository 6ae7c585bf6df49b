#include <iostream>

#include "leiblab/cli.hpp"

int main(int argc, char** argv) { return leiblab::cli_main(argc, argv, std::cout, std::cerr); }
