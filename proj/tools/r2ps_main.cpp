#include <iostream>
#include <string>
#include <vector>

#include <r2ps/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return r2ps::cli::run(std::move(args), std::cout, std::cerr);
}
