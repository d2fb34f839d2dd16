#include <iostream>

#include "realbundles/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rb::run_cli(args, std::cout);
}
