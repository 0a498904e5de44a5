#include <iostream>
#include <string>
#include <vector>

#include "twisted/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return twisted::run_cli(args, std::cout, std::cerr);
}
