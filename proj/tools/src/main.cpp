#include <iostream>

#include "combx/cli.hpp"

int main(int argc, char** argv) {
    return combx::run(argc, argv, std::cout, std::cerr);
}
