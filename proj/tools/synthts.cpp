#include "synthts/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return synthts::cli::run(args, std::cout, std::cerr);
}
