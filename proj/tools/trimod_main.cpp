#include <iostream>
#include <vector>

#include "trimod/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return trimod::cli_run(args, std::cout, std::cerr);
}
