#include <iostream>

#include "suppbound/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return suppbound::run_cli(args, std::cout, std::cerr);
}
