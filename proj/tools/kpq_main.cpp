#include "kpq/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return kpq::run_cli(argc, argv, std::cout, std::cerr); }
