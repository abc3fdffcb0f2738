#include <iostream>
#include <vector>

#include "vfcert/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return vfcert::cli::run(args, std::cout, std::cerr);
}
