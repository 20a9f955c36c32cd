#include <iostream>

#include "disect/cli.hpp"

int main(int argc, char** argv) {
    return disect::cli_run(argc, argv, std::cout, std::cerr);
}
