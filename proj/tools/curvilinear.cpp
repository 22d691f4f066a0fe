#include <iostream>

#include "curvilinear/cli.hpp"

int main(int argc, char** argv) { return curvilinear::cli::run(argc, argv, std::cout, std::cerr); }
