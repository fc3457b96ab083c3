#include <iostream>

#include "bassinv/cli.hpp"

int main(int argc, char** argv) { return bassinv::cli::run(argc, argv, std::cout, std::cerr); }
