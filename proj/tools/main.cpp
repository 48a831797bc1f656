#include <iostream>
#include <string>
#include <vector>

#include "binperm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return binperm::cli::run(args, std::cout, std::cerr);
}
