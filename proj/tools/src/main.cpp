#include <iostream>
#include <string>
#include <vector>

#include "edgemin_cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return edgemin::cli::run(args, std::cout, std::cerr);
}
