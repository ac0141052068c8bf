#include <iostream>

#include "puiseux/cli.hpp"

int main(int argc, char** argv) {
    return puiseux::run_cli(argc, argv, std::cout, std::cerr);
}
