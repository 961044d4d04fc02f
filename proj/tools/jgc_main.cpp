#include <iostream>

#include "johnson/cli.hpp"

int main(int argc, char** argv) { return johnson::run(argc, argv, std::cout, std::cerr); }
