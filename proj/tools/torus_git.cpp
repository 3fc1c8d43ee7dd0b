#include <iostream>
#include <string>
#include <vector>

#include "torus_git/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return torus_git::cli::run(args, std::cout, std::cerr);
}
