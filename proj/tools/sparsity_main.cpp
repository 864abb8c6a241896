#include "sparsity/commands.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return sparsity::cli::run(argc, argv, std::cout, std::cerr);
}
