#include <iostream>
#include <string>
#include <vector>

#include "tripants/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tripants::cli::run(std::move(args), std::cout, std::cerr);
}
