#include <iostream>

#include "folindex/cli.hpp"

int main(int argc, char** argv) {
    return folindex::cli::run_command(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
