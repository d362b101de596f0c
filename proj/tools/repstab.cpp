#include "repstab/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = repstab::cli::run(args);
    (result.exit_code() == 0 ? std::cout : std::cerr) << result.output();
    return result.exit_code();
}
