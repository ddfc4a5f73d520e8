#include <iostream>

#include "squig_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return squig::cli::run_cli(args, std::cout, std::cerr);
}
