#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return onlinecolor::cli::dispatch(argc, argv, std::cout, std::cerr); }
