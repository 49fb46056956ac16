#include <iostream>
#include <string>
#include <vector>

#include "dw/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dw::cli_main(std::move(args), std::cout, std::cerr);
}
