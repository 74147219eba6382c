#include <iostream>
#include <string>
#include <vector>

#include "fuzzy_ershov/cli.hpp"

int main(int argc, char **argv)
{
	std::vector<std::string> args(argv + 1, argv + argc);
	return fuzzy_ershov::cli::run(args, std::cout, std::cerr);
}
