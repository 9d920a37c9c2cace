#include <iostream>
#include <string>
#include <vector>

#include "hecke/cli.hpp"

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return hecke::cli::run(args, std::cout, std::cerr);
}
