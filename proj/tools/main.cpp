#include <iostream>
#include <string>
#include <vector>

#include "burau_forge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return burau_forge::run(args, std::cout, std::cerr);
}
