#include <iostream>

#include "hyperforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hyperforge::run_cli(args, std::cout, std::cerr);
}
