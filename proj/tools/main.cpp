#include <iostream>

#include "monochrome/cli.hpp"

int main(int argc, char** argv) { return mono::run_cli(argc, argv, std::cout, std::cerr); }
