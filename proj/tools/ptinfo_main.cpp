#include <iostream>

#include "ptinfo/cli.hpp"

int main(int argc, char** argv) {
    return ptinfo::cli::run_cli(argc, argv, std::cout, std::cerr);
}
