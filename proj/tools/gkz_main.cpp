#include <iostream>
#include <string>
#include <vector>

#include "gkz/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gkz::cli::main_entry(args, std::cout, std::cerr);
}
