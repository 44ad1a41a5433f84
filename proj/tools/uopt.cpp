#include <iostream>

#include "uopt/cli.hpp"

int main(int argc, char** argv) {
    return uopt::cli::run_cli(argc, argv, std::cout, std::cerr);
}
