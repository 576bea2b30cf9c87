#include <unistd.h>

#include <iostream>

#include "pebbling/cli.hpp"

int main(int argc, char** argv) {
    bool tty = isatty(fileno(stdout)) != 0;
    return pebbling::cli::run_cli(argc, argv, std::cout, std::cerr, tty);
}
