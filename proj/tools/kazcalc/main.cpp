#include <iostream>

#include "kazcalc/cli.hpp"

int main(int argc, char **argv)
{
    return kazcalc::cli::main_entry(argc, argv, std::cout, std::cerr);
}
