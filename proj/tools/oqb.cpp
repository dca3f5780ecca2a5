// Command-line front end; see `oqb --help`.

#include <iostream>
#include <string>
#include <vector>

#include "oqb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return oqb::run_cli(args, std::cout, std::cerr);
}
