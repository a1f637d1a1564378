#include <iostream>

#include "z4cent/cli/run.hpp"

int main(int argc, char** argv) { return z4cent::cli::main_entry(argc, argv, std::cout, std::cerr); }
