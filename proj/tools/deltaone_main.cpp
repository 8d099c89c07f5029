#include <iostream>

#include "deltaone/cli.hpp"

int main(int argc, char** argv) {
    return deltaone::run_cli(argc, argv, std::cout, std::cerr);
}
