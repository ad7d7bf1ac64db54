#include <iostream>

#include "signiter/cli.hpp"

int main(int argc, char** argv) { return signiter::cli::run(argc, argv, std::cout, std::cerr); }
