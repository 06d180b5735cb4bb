#include <iostream>

#include "magsteklov/cli.hpp"

int main(int argc, char** argv) {
    return magsteklov::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
