#include <iostream>
#include <vector>

#include "asep/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return asep::run_cli(std::move(args), std::cout, std::cerr);
}
