#include <iostream>

#include "graham/cli.hpp"

int main(int argc, char** argv) {
    return graham::cli::run(argc, argv, std::cout, std::cerr);
}
