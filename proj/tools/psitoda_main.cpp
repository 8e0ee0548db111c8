#include <iostream>

#include "psitoda/cli.hpp"

int main(int argc, char **argv) {
    return psitoda::run_cli(argc, argv, std::cout, std::cerr);
}
