#include "operad_forge/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return operad_forge::run(argc, argv, std::cout, std::cerr); }
