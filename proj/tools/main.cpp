#include <iostream>
#include <string>
#include <vector>

#include "ellsurf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return ellsurf::cli::run(args, std::cout, std::cerr);
}
