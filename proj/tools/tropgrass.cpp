#include <iostream>

#include "tropgrass/cli.hpp"

int main(int argc, char** argv) { return tropgrass::cli::run(argc, argv, std::cout, std::cerr); }
