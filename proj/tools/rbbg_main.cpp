#include <iostream>
#include <string>
#include <vector>

#include "rbbg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return rbbg::cli::run(args, std::cout, std::cerr);
}
