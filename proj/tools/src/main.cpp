#include <iostream>

#include "vsp/tools/commands.hpp"

int main(int argc, char** argv) { return vsp::tools::run_cli(argc, argv, std::cout, std::cerr); }
