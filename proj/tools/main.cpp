#include <iostream>

#include "riordan/cli.hpp"

int main(int argc, char** argv) {
    return riordan::cli::run(argc, argv, std::cout, std::cerr);
}
