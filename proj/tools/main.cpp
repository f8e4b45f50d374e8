#include <iostream>

#include "isk4/cli.hpp"

int main(int argc, char** argv) {
    return isk4::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
