#include <iostream>

#include "grtoda/cli.hpp"

int main(int argc, char** argv) {
    return grtoda::run_cli(argc, argv, std::cout, std::cerr);
}
