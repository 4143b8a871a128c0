#include <iostream>

#include "yuga/cli.hpp"

int main(int argc, char** argv) {
    return yuga::cli::run(argc, argv, std::cout, std::cerr);
}
