#include <gramface/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return gramface::run_cli(argc, argv, std::cout, std::cerr); }
