#include <iostream>
#include <string>
#include <vector>

#include "evensym/cli.hpp"

int main(int argc, char** argv) {
	std::vector<std::string> args(argv + 1, argv + argc);
	return evensym::run_cli(args, std::cout, std::cerr);
}
