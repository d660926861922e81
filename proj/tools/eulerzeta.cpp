#include <iostream>

#include "eulerzeta/cli.hpp"

int main(int argc, char** argv) { return eulerzeta::run(argc, argv, std::cout, std::cerr); }
