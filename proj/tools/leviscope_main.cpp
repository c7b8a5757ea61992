#include <iostream>
#include <string>
#include <vector>

#include "leviscope/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return leviscope::cli_run(args, std::cout, std::cerr);
}
