#include <iostream>

#include "fpg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fpg::run_cli(args, std::cout, std::cerr);
}
