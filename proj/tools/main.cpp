#include "resched/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return resched::run_cli(argc, argv, std::cout, std::cerr);
}
