#include <iostream>

#include "qobdd/cli.hpp"

int main(int argc, char** argv) {
    return qobdd::run_command(argc, argv, std::cout, std::cerr);
}
