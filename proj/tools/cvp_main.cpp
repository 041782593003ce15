#include <iostream>

#include "cvp/cli.hpp"

int main(int argc, char** argv) {
    return cvp::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
