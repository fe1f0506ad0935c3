#include "transit/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return transit::cli_main(argc, argv, std::cout, std::cerr); }
