#include "tpalg/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return tpalg::cli::run(args, std::cout, std::cerr);
}
