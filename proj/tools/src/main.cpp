#include <iostream>

#include "rsum_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rsum::cli::run(args, std::cout, std::cerr);
}
