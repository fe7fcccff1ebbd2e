#include <iostream>

#include "unity/cli.hpp"

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);
    return unity::cli::run(argc, argv, std::cout, std::cerr);
}
