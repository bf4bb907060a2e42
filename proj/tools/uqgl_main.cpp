#include <iostream>
#include <string>
#include <vector>

#include "uqgl/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    uqgl::CliResult res = uqgl::run_cli(args, std::cin);
    std::cout << res.out;
    std::cerr << res.err;
    return res.exit_code;
}
