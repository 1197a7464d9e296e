#include <iostream>

#include "herbrand/cli.hpp"

int main(int argc, char** argv) { return herbrand::run_cli(argc, argv, std::cout, std::cerr); }
