#include <iostream>

#include "symfv/cli.hpp"

int main(int argc, char** argv) { return symfv::cli_main(argc, argv, std::cout, std::cerr); }
