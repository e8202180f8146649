#include <iostream>
#include <string>
#include <vector>

#include "tamefiber/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tamefiber::run(args, std::cout, std::cerr);
}
