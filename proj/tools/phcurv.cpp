#include <iostream>

#include "phcurv/cli.hpp"

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);
    return phcurv::cli::main_entry({argv + 1, argv + argc}, std::cout, std::cerr);
}
