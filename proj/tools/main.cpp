#include <iostream>
#include <string>
#include <vector>

#include "polycenter/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return polycenter::cli::run(args, std::cout, std::cerr);
}
