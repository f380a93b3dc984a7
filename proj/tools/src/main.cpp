#include <iostream>

#include "hrlab_cli/cli.hpp"

int main(int argc, char** argv) { return hrlab::cli::run(argc, argv, std::cout, std::cerr); }
