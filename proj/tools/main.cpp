#include <iostream>

#include "cylfocus/commands.hpp"

int main(int argc, char** argv) {
    return cylfocus::run_cli(argc, argv, std::cout, std::cerr);
}
