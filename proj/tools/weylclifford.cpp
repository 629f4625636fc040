#include <iostream>

#include <weylclifford/cli.hpp>

int main(int argc, char **argv) { return weylclifford::cli::run(argc, argv, std::cout, std::cerr); }
