#include <iostream>
#include <string>
#include <vector>

#include "threecolor/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return threecolor::run_cli(args, std::cout, std::cerr);
}
