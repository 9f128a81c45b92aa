#include <cstdlib>
#include <iostream>
#include <unistd.h>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    bool color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
    return walker::cli::run(args, std::cout, std::cerr, color);
}
