#include "howe_cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto outcome = howe::cli::run(args, std::cin);
    std::cout << outcome.out;
    std::cerr << outcome.err;
    return outcome.exit_code;
}
