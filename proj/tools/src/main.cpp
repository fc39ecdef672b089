#include <iostream>

#include "sea/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const sea::cli::CommandResult r = sea::cli::execute(args);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
