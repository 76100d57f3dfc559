#include <iostream>

#include "semitrans/tools/cli.hpp"

int main(int argc, char** argv) { return semitrans::tools::run(argc, argv, std::cout, std::cerr); }
